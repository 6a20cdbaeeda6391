#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linco {

// Thrown by the text parsers; messages name the offending line where possible.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a brute-force cost guard would be exceeded without an override.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Undirected simple loopless graph on vertices 0..n-1, sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
  }

  // Bulk constructor: takes possibly unsorted lists with duplicates, fixes them up.
  static Graph from_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
      auto& nb = g.adj_[static_cast<std::size_t>(x)];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      for (int y : nb) {
        if (y < 0 || y >= n) throw std::invalid_argument("vertex id out of range");
        if (y == x) throw std::invalid_argument("self-loop");
      }
    }
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  long long edge_count() const {
    long long total = 0;
    for (const auto& nb : adj_) total += static_cast<long long>(nb.size());
    return total / 2;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Open neighbourhood N(x), sorted.
  const std::vector<int>& neighbors(int x) const {
    check_vertex(x);
    return adj_[static_cast<std::size_t>(x)];
  }

  /// Closed neighbourhood N[x], sorted.
  std::vector<int> closed_neighbors(int x) const {
    check_vertex(x);
    std::vector<int> out = adj_[static_cast<std::size_t>(x)];
    out.insert(std::lower_bound(out.begin(), out.end(), x), x);
    return out;
  }

 private:
  static void insert_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  }
  void check_vertex(int x) const {
    if (x < 0 || x >= vertex_count()) throw std::out_of_range("vertex id out of range");
  }

  std::vector<std::vector<int>> adj_;
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Parses a whitespace-separated list of ints; returns false on any junk.
inline bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != tok.size()) return false;
    out.push_back(v);
  }
  return true;
}

}  // namespace detail

/// Edge-list format: header "n m", then m lines "u v". '#' lines and blank
/// lines are ignored; ids must be in range, loops rejected, duplicates merged.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (detail::blank_or_comment(line)) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string data;
  if (!next_data_line(data)) throw parse_error("missing header line");
  std::vector<long long> nums;
  if (!detail::parse_ints(data, nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
    throw parse_error("malformed header at line " + std::to_string(line_no));
  const long long n = nums[0], m = nums[1];
  if (n > 1000000) throw parse_error("vertex count too large at line " + std::to_string(line_no));

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_data_line(data))
      throw parse_error("unexpected end of input: expected " + std::to_string(m) + " edges");
    if (!detail::parse_ints(data, nums) || nums.size() != 2)
      throw parse_error("malformed token at line " + std::to_string(line_no));
    const long long u = nums[0], v = nums[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("vertex id out of range at line " + std::to_string(line_no));
    if (u == v) throw parse_error("self-loop at line " + std::to_string(line_no));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_data_line(data)) throw parse_error("trailing content at line " + std::to_string(line_no));
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream ss(text);
  return parse_edge_list(ss);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

/// Subgraph induced by `verts` (need not be sorted), relabelled to 0..|s|-1
/// in ascending order of the original ids.
inline Graph induced_subgraph(const Graph& g, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= g.vertex_count())
      throw std::out_of_range("vertex id out of range");
    local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(verts.size()));
  for (int u : verts)
    for (int v : g.neighbors(u))
      if (u < v && local[static_cast<std::size_t>(v)] >= 0)
        out.add_edge(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  return out;
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

}  // namespace linco

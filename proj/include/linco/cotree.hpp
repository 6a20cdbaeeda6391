#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "linco/graph.hpp"

namespace linco {

enum class NodeLabel : std::uint8_t { Series, Parallel };

inline NodeLabel opposite(NodeLabel l) {
  return l == NodeLabel::Series ? NodeLabel::Parallel : NodeLabel::Series;
}
inline char label_char(NodeLabel l) { return l == NodeLabel::Series ? 'S' : 'P'; }

/// Rooted leaf-labelled series/parallel tree stored as a node arena.
/// Leaves carry vertex ids; two leaves are adjacent in the derived graph
/// exactly when their lowest common ancestor is a Series node.
class Cotree {
 public:
  struct Node {
    bool is_leaf = false;
    int vertex = -1;  // leaf payload, valid when is_leaf
    NodeLabel label = NodeLabel::Series;
    int parent = -1;
    std::vector<int> children;
  };

  int add_leaf(int vertex) {
    Node nd;
    nd.is_leaf = true;
    nd.vertex = vertex;
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int add_internal(NodeLabel label) {
    Node nd;
    nd.label = label;
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
  }

  void add_child(int parent, int child) {
    nodes_.at(static_cast<std::size_t>(parent)).children.push_back(child);
    nodes_.at(static_cast<std::size_t>(child)).parent = parent;
  }

  void set_root(int id) { root_ = id; }

  int root() const {
    if (root_ < 0) throw std::logic_error("cotree has no root");
    return root_;
  }
  bool empty() const { return nodes_.empty(); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  int leaf_count() const {
    int c = 0;
    for (const auto& nd : nodes_) c += nd.is_leaf ? 1 : 0;
    return c;
  }

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Leaves of the subtree rooted at u, in left-to-right (child order) sequence.
inline std::vector<int> subtree_leaves(const Cotree& t, int u) {
  std::vector<int> out;
  std::vector<int> stack{u};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& nd = t.node(v);
    if (nd.is_leaf) {
      out.push_back(nd.vertex);
    } else {
      for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

inline int cotree_height(const Cotree& t) {
  int best = 0;
  std::vector<std::pair<int, int>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    const auto& nd = t.node(v);
    if (nd.is_leaf) {
      best = std::max(best, d);
    } else {
      for (int c : nd.children) stack.push_back({c, d + 1});
    }
  }
  return best;
}

/// Checks the structural invariants: single root covering every node once,
/// internal nodes have >= 2 children with alternating labels, and the leaf
/// vertex ids form exactly {0..n-1}.
inline bool check_cotree(const Cotree& t, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.empty()) return fail("empty tree");
  int root = -1;
  try {
    root = t.root();
  } catch (const std::logic_error&) {
    return fail("no root set");
  }
  if (root < 0 || root >= t.node_count()) return fail("root id out of range");
  if (t.node(root).parent != -1) return fail("root has a parent");

  std::vector<char> seen(static_cast<std::size_t>(t.node_count()), 0);
  std::vector<int> leaves;
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    const auto& nd = t.node(v);
    if (nd.is_leaf) {
      if (!nd.children.empty()) return fail("leaf with children");
      leaves.push_back(nd.vertex);
      continue;
    }
    if (static_cast<int>(nd.children.size()) < 2)
      return fail("internal node with fewer than 2 children");
    for (int c : nd.children) {
      if (c < 0 || c >= t.node_count()) return fail("child id out of range");
      if (seen[static_cast<std::size_t>(c)]) return fail("node reached twice");
      seen[static_cast<std::size_t>(c)] = 1;
      const auto& cn = t.node(c);
      if (cn.parent != v) return fail("parent link mismatch");
      if (!cn.is_leaf && cn.label == nd.label) return fail("equal labels on adjacent internal nodes");
      stack.push_back(c);
    }
  }
  if (visited != t.node_count()) return fail("unreachable nodes in arena");
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != static_cast<int>(i)) return fail("leaf ids are not exactly 0..n-1");
  return true;
}

namespace detail {

inline int min_leaf_rec(const Cotree& t, int u, std::vector<int>& memo) {
  int& m = memo[static_cast<std::size_t>(u)];
  if (m != std::numeric_limits<int>::max()) return m;
  const auto& nd = t.node(u);
  if (nd.is_leaf) return m = nd.vertex;
  int best = std::numeric_limits<int>::max();
  for (int c : nd.children) best = std::min(best, min_leaf_rec(t, c, memo));
  return m = best;
}

inline int copy_canonical(const Cotree& src, int u, const std::vector<int>& min_leaf, Cotree& dst) {
  const auto& nd = src.node(u);
  if (nd.is_leaf) return dst.add_leaf(nd.vertex);
  int id = dst.add_internal(nd.label);
  std::vector<int> kids = nd.children;
  std::sort(kids.begin(), kids.end(), [&](int a, int b) {
    return min_leaf[static_cast<std::size_t>(a)] < min_leaf[static_cast<std::size_t>(b)];
  });
  for (int c : kids) dst.add_child(id, copy_canonical(src, c, min_leaf, dst));
  return id;
}

}  // namespace detail

/// Smallest leaf id in each subtree; used for the canonical child order.
inline std::vector<int> min_leaf_map(const Cotree& t) {
  std::vector<int> memo(static_cast<std::size_t>(t.node_count()), std::numeric_limits<int>::max());
  detail::min_leaf_rec(t, t.root(), memo);
  return memo;
}

/// Canonical form: children sorted by smallest contained leaf id, arena
/// rebuilt in preorder so equal trees get byte-identical serializations.
inline Cotree canonicalize(const Cotree& t) {
  std::vector<int> ml = min_leaf_map(t);
  Cotree out;
  out.set_root(detail::copy_canonical(t, t.root(), ml, out));
  return out;
}

inline void format_cotree_rec(const Cotree& t, int u, std::string& out) {
  const auto& nd = t.node(u);
  if (nd.is_leaf) {
    out += std::to_string(nd.vertex);
    return;
  }
  out += label_char(nd.label);
  out += '(';
  for (std::size_t i = 0; i < nd.children.size(); ++i) {
    if (i) out += ',';
    format_cotree_rec(t, nd.children[i], out);
  }
  out += ')';
}

/// Text form, e.g. "S(P(0,1),P(2,3))". Printing a canonical tree and parsing
/// it back round-trips byte-exactly.
inline std::string format_cotree(const Cotree& t) {
  std::string out;
  format_cotree_rec(t, t.root(), out);
  return out;
}

namespace detail {

struct CotreeParser {
  const std::string& text;
  std::size_t pos = 0;
  Cotree tree;

  explicit CotreeParser(const std::string& s) : text(s) {}

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("cotree parse: " + what + " at offset " + std::to_string(pos));
  }

  int parse_node() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == 'S' || c == 'P') {
      NodeLabel label = c == 'S' ? NodeLabel::Series : NodeLabel::Parallel;
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != '(') fail("expected '('");
      ++pos;
      int id = tree.add_internal(label);
      while (true) {
        tree.add_child(id, parse_node());
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')'");
      }
      return id;
    }
    if (c >= '0' && c <= '9') {
      long long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > std::numeric_limits<int>::max()) fail("leaf id too large");
        ++pos;
      }
      return tree.add_leaf(static_cast<int>(v));
    }
    fail("unexpected character");
  }
};

}  // namespace detail

/// Parses the text form. Child order is preserved as written; structural
/// invariants are checked so malformed trees are rejected here.
inline Cotree parse_cotree(const std::string& text) {
  detail::CotreeParser p(text);
  int root = p.parse_node();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  p.tree.set_root(root);
  std::string why;
  if (!check_cotree(p.tree, &why)) throw parse_error("invalid cotree: " + why);
  return p.tree;
}

inline bool same_cotree(const Cotree& a, const Cotree& b) {
  return format_cotree(canonicalize(a)) == format_cotree(canonicalize(b));
}

namespace detail {

inline std::vector<int> to_graph_rec(const Cotree& t, int u, std::vector<std::vector<int>>& adj) {
  const auto& nd = t.node(u);
  if (nd.is_leaf) return {nd.vertex};
  std::vector<int> acc;
  for (int c : nd.children) {
    std::vector<int> part = to_graph_rec(t, c, adj);
    if (nd.label == NodeLabel::Series) {
      for (int a : acc)
        for (int b : part) {
          adj[static_cast<std::size_t>(a)].push_back(b);
          adj[static_cast<std::size_t>(b)].push_back(a);
        }
    }
    acc.insert(acc.end(), part.begin(), part.end());
  }
  return acc;
}

}  // namespace detail

/// Materializes the graph the cotree denotes. Quadratic in the worst case;
/// meant for desk-scale n (see cotree_closed_neighborhood for big trees).
inline Graph cotree_to_graph(const Cotree& t) {
  const int n = t.leaf_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  detail::to_graph_rec(t, t.root(), adj);
  return Graph::from_adjacency(std::move(adj));
}

/// leaf_of_vertex[v] = arena id of the leaf carrying vertex v.
inline std::vector<int> leaf_of_vertex(const Cotree& t) {
  std::vector<int> out(static_cast<std::size_t>(t.leaf_count()), -1);
  for (int id = 0; id < t.node_count(); ++id) {
    const auto& nd = t.node(id);
    if (nd.is_leaf) {
      if (nd.vertex < 0 || nd.vertex >= static_cast<int>(out.size()))
        throw std::logic_error("leaf vertex out of range");
      out[static_cast<std::size_t>(nd.vertex)] = id;
    }
  }
  return out;
}

/// N[x] straight off the tree: walk up from the leaf and collect sibling
/// subtrees under Series ancestors. O(n) per query, no graph materialization.
inline std::vector<int> cotree_closed_neighborhood(const Cotree& t, const std::vector<int>& leaf_map,
                                                   int x) {
  if (x < 0 || x >= static_cast<int>(leaf_map.size()))
    throw std::out_of_range("vertex id out of range");
  std::vector<int> out{x};
  int child = leaf_map[static_cast<std::size_t>(x)];
  int up = t.node(child).parent;
  while (up != -1) {
    const auto& nd = t.node(up);
    if (nd.label == NodeLabel::Series) {
      for (int c : nd.children) {
        if (c == child) continue;
        std::vector<int> part = subtree_leaves(t, c);
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    child = up;
    up = nd.parent;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> cotree_closed_neighborhood(const Cotree& t, int x) {
  return cotree_closed_neighborhood(t, leaf_of_vertex(t), x);
}

namespace detail {

inline int copy_subtree_rec(const Cotree& src, int u, Cotree& dst, int& next_leaf) {
  const auto& nd = src.node(u);
  if (nd.is_leaf) return dst.add_leaf(next_leaf++);
  int id = dst.add_internal(nd.label);
  for (int c : nd.children) dst.add_child(id, copy_subtree_rec(src, c, dst, next_leaf));
  return id;
}

}  // namespace detail

/// Standalone copy of the subtree at u with leaves renumbered 0..k-1 in
/// left-to-right order (the local ids used by per-node encodings).
inline Cotree subtree_cotree(const Cotree& t, int u) {
  Cotree out;
  int next_leaf = 0;
  out.set_root(detail::copy_subtree_rec(t, u, out, next_leaf));
  return out;
}

/// Edge count by arithmetic over Series nodes: sum over unordered child pairs
/// of the product of their leaf counts. Safe for very large trees.
inline unsigned long long cotree_edge_count(const Cotree& t) {
  std::vector<unsigned long long> leaves(static_cast<std::size_t>(t.node_count()), 0);
  unsigned long long total = 0;
  // Children have larger arena ids than parents only in freshly built trees,
  // so do an explicit postorder.
  std::vector<std::pair<int, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    const auto& nd = t.node(v);
    if (nd.is_leaf) {
      leaves[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    if (!done) {
      stack.push_back({v, true});
      for (int c : nd.children) stack.push_back({c, false});
      continue;
    }
    unsigned long long sum = 0;
    for (int c : nd.children) {
      unsigned long long lc = leaves[static_cast<std::size_t>(c)];
      if (nd.label == NodeLabel::Series) total += sum * lc;
      sum += lc;
    }
    leaves[static_cast<std::size_t>(v)] = sum;
  }
  return total;
}

}  // namespace linco

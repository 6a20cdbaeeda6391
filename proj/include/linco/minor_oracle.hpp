#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "linco/rank.hpp"

namespace linco {

/// Node count of the double factorial tree of height h: N(0)=1,
/// N(h) = 1 + (2h+1) N(h-1).
inline long long double_factorial_node_count(int h) {
  long long n = 1;
  for (int i = 1; i <= h; ++i) n = 1 + (2LL * i + 1) * n;
  return n;
}

namespace detail {

inline int dfact_shape_rec(RootedTree& t, int height, int parent) {
  int id = t.add_node(parent);
  for (int i = 0; i < 2 * height + 1 && height > 0; ++i) dfact_shape_rec(t, height - 1, id);
  return id;
}

}  // namespace detail

inline RootedTree double_factorial_shape(int h) {
  RootedTree t;
  detail::dfact_shape_rec(t, h, -1);
  return t;
}

namespace detail {

inline std::string tree_code_rec(const RootedTree& t, int u) {
  std::vector<std::string> parts;
  for (int c : t.children[static_cast<std::size_t>(u)]) parts.push_back(tree_code_rec(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace detail

/// Canonical shape code: children codes sorted, so isomorphic rooted trees
/// (as unordered trees) get equal codes.
inline std::string rooted_tree_code(const RootedTree& t) { return detail::tree_code_rec(t, t.root); }

namespace detail {

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(static_cast<std::size_t>(n)) {
    std::iota(up.begin(), up.end(), 0);
  }
  int find(int x) {
    while (up[static_cast<std::size_t>(x)] != x) {
      up[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
      x = up[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { up[static_cast<std::size_t>(find(a))] = find(b); }
};

// Quotient of t by contracting the parent edges of the nodes selected in
// `mask` (indexed by non-root nodes in `edge_nodes` order).
inline RootedTree contract_edges(const RootedTree& t, const std::vector<int>& edge_nodes,
                                 unsigned long mask, const std::vector<int>& depth) {
  const int n = t.node_count();
  Dsu dsu(n);
  for (std::size_t i = 0; i < edge_nodes.size(); ++i)
    if (mask >> i & 1u) dsu.unite(edge_nodes[i], t.parent[static_cast<std::size_t>(edge_nodes[i])]);

  // Each class is a connected subtree; its shallowest member carries the
  // parent relation of the quotient.
  std::vector<int> top(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int r = dsu.find(v);
    int& best = top[static_cast<std::size_t>(r)];
    if (best == -1 || depth[static_cast<std::size_t>(v)] < depth[static_cast<std::size_t>(best)])
      best = v;
  }
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  RootedTree out;
  // Assign quotient ids top-down so parents exist before children.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)];
  });
  for (int v : order) {
    int r = dsu.find(v);
    if (top[static_cast<std::size_t>(r)] != v) continue;
    int par = -1;
    if (v != t.root) {
      int pr = dsu.find(t.parent[static_cast<std::size_t>(v)]);
      par = id[static_cast<std::size_t>(top[static_cast<std::size_t>(pr)])];
    }
    id[static_cast<std::size_t>(v)] = out.add_node(par);
  }
  return out;
}

}  // namespace detail

/// Exhaustive check whether the double factorial tree of height h arises from
/// t by contracting some set of edges. Exponential in the edge count, hence
/// the small-size guard.
inline bool contains_double_factorial_minor(const RootedTree& t, int h, bool override_guard = false) {
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  const int n = t.node_count();
  if (n > 12 && !override_guard)
    throw guard_error("minor oracle guard: tree has " + std::to_string(n) +
                      " nodes (limit 12); pass the override to search anyway");
  if (double_factorial_node_count(h) > n) return false;

  const std::string target = rooted_tree_code(double_factorial_shape(h));
  std::vector<int> edge_nodes;
  for (int v = 0; v < n; ++v)
    if (v != t.root) edge_nodes.push_back(v);
  const std::vector<int> depth = node_depths(t);
  const unsigned long total = 1ul << edge_nodes.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    RootedTree q = detail::contract_edges(t, edge_nodes, mask, depth);
    if (q.node_count() == double_factorial_node_count(h) && rooted_tree_code(q) == target)
      return true;
  }
  return false;
}

/// Largest h whose double factorial tree is a contraction minor of t.
inline int minor_oracle_rank(const RootedTree& t, bool override_guard = false) {
  int h = 0;
  while (double_factorial_node_count(h + 1) <= t.node_count() &&
         contains_double_factorial_minor(t, h + 1, override_guard))
    ++h;
  return h;
}

}  // namespace linco

#pragma once

// Test-only corpora: exhaustive shape enumerations and tiny independent
// oracles that the main test suites check library behaviour against.

#include <string>
#include <vector>

#include "linco/cotree.hpp"
#include "linco/graph.hpp"
#include "linco/rank.hpp"

namespace linco::testsupport {

struct Shape {
  bool is_leaf = true;
  NodeLabel label = NodeLabel::Series;
  std::vector<Shape> kids;
};

inline int shape_nodes(const Shape& s) {
  int total = 1;
  for (const auto& k : s.kids) total += shape_nodes(k);
  return total;
}

inline int shape_leaves(const Shape& s) {
  if (s.is_leaf) return 1;
  int total = 0;
  for (const auto& k : s.kids) total += shape_leaves(k);
  return total;
}

// --- rooted tree shapes (unordered, unlabelled) ---------------------------

// All shapes with exactly n nodes. Children are drawn as a non-decreasing
// index sequence over the catalog of smaller shapes, which enumerates each
// multiset exactly once.
inline std::vector<Shape> tree_shapes(int n) {
  if (n <= 0) return {};
  if (n == 1) return {Shape{}};
  std::vector<Shape> catalog;
  std::vector<int> catalog_nodes;
  for (int s = 1; s < n; ++s)
    for (const auto& sh : tree_shapes(s)) {
      catalog.push_back(sh);
      catalog_nodes.push_back(s);
    }
  std::vector<Shape> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      Shape root;
      root.is_leaf = false;
      for (int idx : chosen) root.kids.push_back(catalog[static_cast<std::size_t>(idx)]);
      out.push_back(std::move(root));
      return;
    }
    for (int i = start; i < static_cast<int>(catalog.size()); ++i) {
      if (catalog_nodes[static_cast<std::size_t>(i)] > remaining) continue;
      chosen.push_back(i);
      self(self, i, remaining - catalog_nodes[static_cast<std::size_t>(i)]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n - 1);
  return out;
}

inline void shape_to_tree_rec(const Shape& s, RootedTree& t, int parent) {
  const int id = t.add_node(parent);
  for (const auto& k : s.kids) shape_to_tree_rec(k, t, id);
}

inline RootedTree shape_to_tree(const Shape& s) {
  RootedTree t;
  shape_to_tree_rec(s, t, -1);
  return t;
}

inline std::vector<RootedTree> all_rooted_trees_up_to(int max_nodes) {
  std::vector<RootedTree> out;
  for (int n = 1; n <= max_nodes; ++n)
    for (const auto& s : tree_shapes(n)) out.push_back(shape_to_tree(s));
  return out;
}

// --- canonical cotree shapes ----------------------------------------------

// Shapes of cotrees with exactly n leaves whose root is internal with the
// given label: >= 2 children, each a leaf or an opposite-label shape.
inline std::vector<Shape> cotree_shapes_rooted(int n, NodeLabel label) {
  if (n < 2) return {};
  std::vector<Shape> catalog{Shape{}};  // the single leaf
  std::vector<int> catalog_leaves{1};
  for (int s = 2; s < n; ++s)
    for (const auto& sh : cotree_shapes_rooted(s, opposite(label))) {
      catalog.push_back(sh);
      catalog_leaves.push_back(s);
    }
  std::vector<Shape> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      if (chosen.size() < 2) return;
      Shape root;
      root.is_leaf = false;
      root.label = label;
      for (int idx : chosen) root.kids.push_back(catalog[static_cast<std::size_t>(idx)]);
      out.push_back(std::move(root));
      return;
    }
    for (int i = start; i < static_cast<int>(catalog.size()); ++i) {
      if (catalog_leaves[static_cast<std::size_t>(i)] > remaining) continue;
      chosen.push_back(i);
      self(self, i, remaining - catalog_leaves[static_cast<std::size_t>(i)]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

inline int shape_to_cotree_rec(const Shape& s, Cotree& t, int& next_leaf) {
  if (s.is_leaf) return t.add_leaf(next_leaf++);
  const int id = t.add_internal(s.label);
  for (const auto& k : s.kids) t.add_child(id, shape_to_cotree_rec(k, t, next_leaf));
  return id;
}

inline Cotree shape_to_cotree(const Shape& s) {
  Cotree t;
  int next_leaf = 0;
  t.set_root(shape_to_cotree_rec(s, t, next_leaf));
  return t;
}

/// One canonical labelled representative per cotree shape with n leaves.
inline std::vector<Cotree> canonical_cotrees(int n) {
  std::vector<Cotree> out;
  if (n == 1) {
    Cotree t;
    t.set_root(t.add_leaf(0));
    out.push_back(std::move(t));
    return out;
  }
  for (NodeLabel label : {NodeLabel::Series, NodeLabel::Parallel})
    for (const auto& s : cotree_shapes_rooted(n, label)) out.push_back(shape_to_cotree(s));
  return out;
}

inline std::vector<Cotree> all_canonical_cotrees_up_to(int max_leaves) {
  std::vector<Cotree> out;
  for (int n = 1; n <= max_leaves; ++n)
    for (auto& t : canonical_cotrees(n)) out.push_back(std::move(t));
  return out;
}

// --- graphs up to isomorphism ---------------------------------------------

/// All graphs on n labelled vertices, one representative per isomorphism
/// class (the lexicographically least edge bitmask under vertex relabelling).
inline std::vector<Graph> graphs_up_to_iso(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("graph enumeration supports 1..6 vertices");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of(static_cast<std::size_t>(pairs));
  std::vector<std::vector<int>> pair_idx(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), -1));
  int e = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      pair_of[static_cast<std::size_t>(e)] = {u, v};
      pair_idx[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = e;
      pair_idx[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = e;
      ++e;
    }

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> edge_maps;
  do {
    std::vector<int> emap(static_cast<std::size_t>(pairs));
    for (int i = 0; i < pairs; ++i) {
      auto [u, v] = pair_of[static_cast<std::size_t>(i)];
      emap[static_cast<std::size_t>(i)] =
          pair_idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                  [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    }
    edge_maps.push_back(std::move(emap));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    bool least = true;
    for (const auto& emap : edge_maps) {
      unsigned mapped = 0;
      for (int i = 0; i < pairs; ++i)
        if (mask >> i & 1u) mapped |= 1u << emap[static_cast<std::size_t>(i)];
      if (mapped < mask) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    Graph g(n);
    for (int i = 0; i < pairs; ++i)
      if (mask >> i & 1u) g.add_edge(pair_of[static_cast<std::size_t>(i)].first,
                                     pair_of[static_cast<std::size_t>(i)].second);
    out.push_back(std::move(g));
  }
  return out;
}

// --- direct single-run order check ----------------------------------------

/// True when some vertex order makes every closed neighbourhood one
/// contiguous run. Written directly from the definition, independent of the
/// oracle module.
inline bool exists_single_run_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool all_single = true;
    for (int x = 0; x < n && all_single; ++x) {
      std::vector<char> in_target(static_cast<std::size_t>(n), 0);
      in_target[static_cast<std::size_t>(x)] = 1;
      for (int y : g.neighbors(x)) in_target[static_cast<std::size_t>(y)] = 1;
      int runs = 0;
      bool prev = false;
      for (int p = 0; p < n; ++p) {
        const bool cur = in_target[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] != 0;
        if (cur && !prev) ++runs;
        prev = cur;
      }
      all_single = runs == 1;
    }
    if (all_single) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace linco::testsupport

#pragma once

#include <stdexcept>
#include <vector>

#include "linco/cotree.hpp"

namespace linco {

/// Bare rooted tree (no labels); the rank machinery only needs the shape.
struct RootedTree {
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // child order as built
  int root = 0;

  int node_count() const { return static_cast<int>(parent.size()); }

  static RootedTree single() {
    RootedTree t;
    t.parent = {-1};
    t.children.resize(1);
    t.root = 0;
    return t;
  }

  // Appends a node under `par`, or a root when par == -1 (only once).
  int add_node(int par) {
    int id = node_count();
    parent.push_back(par);
    children.emplace_back();
    if (par >= 0)
      children[static_cast<std::size_t>(par)].push_back(id);
    else
      root = id;
    return id;
  }
};

/// Shape of a cotree under the same node ids.
inline RootedTree tree_of_cotree(const Cotree& t) {
  RootedTree out;
  out.parent.resize(static_cast<std::size_t>(t.node_count()));
  out.children.resize(static_cast<std::size_t>(t.node_count()));
  for (int id = 0; id < t.node_count(); ++id) {
    out.parent[static_cast<std::size_t>(id)] = t.node(id).parent;
    out.children[static_cast<std::size_t>(id)] = t.node(id).children;
  }
  out.root = t.root();
  return out;
}

inline std::vector<int> postorder(const RootedTree& t) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(t.node_count()));
  std::vector<std::pair<int, bool>> stack{{t.root, false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (done) {
      order.push_back(v);
      continue;
    }
    stack.push_back({v, true});
    for (int c : t.children[static_cast<std::size_t>(v)]) stack.push_back({c, false});
  }
  return order;
}

inline std::vector<int> node_depths(const RootedTree& t) {
  std::vector<int> depth(static_cast<std::size_t>(t.node_count()), 0);
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : t.children[static_cast<std::size_t>(v)]) {
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(v)] + 1;
      stack.push_back(c);
    }
  }
  return depth;
}

/// Per-node factorial rank together with the antichain counts that witness it.
/// antichain[u][r] is the largest number of disjoint rank->=r subtrees inside
/// the subtree of u; a node reaches rank h when its children jointly supply
/// 2h+1 disjoint rank-(h-1) subtrees.
struct RankAnnotation {
  std::vector<int> rank;
  std::vector<char> minimal;  // all children have strictly smaller rank
  std::vector<std::vector<int>> antichain;
  int root_rank = 0;

  int antichain_count(int u, int r) const {
    const auto& row = antichain[static_cast<std::size_t>(u)];
    return r < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(r)] : 0;
  }
};

inline RankAnnotation factorial_rank(const RootedTree& t) {
  const int n = t.node_count();
  if (n == 0) throw std::invalid_argument("empty tree");
  RankAnnotation ann;
  ann.rank.assign(static_cast<std::size_t>(n), 0);
  ann.minimal.assign(static_cast<std::size_t>(n), 1);
  ann.antichain.resize(static_cast<std::size_t>(n));

  for (int u : postorder(t)) {
    const auto& kids = t.children[static_cast<std::size_t>(u)];
    int r = 0;
    for (int c : kids) r = std::max(r, ann.rank[static_cast<std::size_t>(c)]);
    // Child antichain sums are nonincreasing in the level, so the set of
    // levels clearing the 2h+1 threshold is downward closed.
    for (int h = 1;; ++h) {
      long long sum = 0;
      for (int c : kids) sum += ann.antichain_count(c, h - 1);
      if (sum >= 2LL * h + 1)
        r = std::max(r, h);
      else
        break;
    }
    ann.rank[static_cast<std::size_t>(u)] = r;
    bool minimal = true;
    for (int c : kids) minimal = minimal && ann.rank[static_cast<std::size_t>(c)] <= r - 1;
    ann.minimal[static_cast<std::size_t>(u)] = minimal ? 1 : 0;

    auto& row = ann.antichain[static_cast<std::size_t>(u)];
    row.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int rr = 0; rr <= r; ++rr) {
      long long sum = 0;
      for (int c : kids) sum += ann.antichain_count(c, rr);
      // The subtree of u itself always counts as one rank->=rr subtree here.
      row[static_cast<std::size_t>(rr)] = static_cast<int>(std::max(sum, 1LL));
    }
  }
  ann.root_rank = ann.rank[static_cast<std::size_t>(t.root)];
  return ann;
}

inline RankAnnotation factorial_rank(const Cotree& t) { return factorial_rank(tree_of_cotree(t)); }

/// True when every child of u has rank < rank(u); vacuously true for leaves.
inline bool is_minimally_of_rank(const RankAnnotation& ann, int u) {
  return ann.minimal.at(static_cast<std::size_t>(u)) != 0;
}

}  // namespace linco

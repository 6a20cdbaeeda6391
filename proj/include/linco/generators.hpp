#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "linco/cotree.hpp"

namespace linco {

namespace detail {

struct LeafCounter {
  int next = 0;
};

inline int gen_uniform_rec(Cotree& t, int height, NodeLabel label, int fanout, LeafCounter& lc) {
  if (height == 0) return t.add_leaf(lc.next++);
  int id = t.add_internal(label);
  for (int i = 0; i < fanout; ++i)
    t.add_child(id, gen_uniform_rec(t, height - 1, opposite(label), fanout, lc));
  return id;
}

}  // namespace detail

/// Complete label-alternating tree of the given height where every internal
/// node has exactly two children. Leaves are numbered left to right.
inline Cotree gen_binary_cotree(int h, NodeLabel root_label) {
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  Cotree t;
  detail::LeafCounter lc;
  t.set_root(detail::gen_uniform_rec(t, h, root_label, 2, lc));
  return t;
}

namespace detail {

inline int gen_dfact_rec(Cotree& t, int height, NodeLabel label, LeafCounter& lc) {
  if (height == 0) return t.add_leaf(lc.next++);
  int id = t.add_internal(label);
  for (int i = 0; i < 2 * height + 1; ++i)
    t.add_child(id, gen_dfact_rec(t, height - 1, opposite(label), lc));
  return id;
}

}  // namespace detail

/// Double factorial tree: a node at distance d from the leaves has 2d+1
/// children, so the leaf count is the odd double factorial (2h+1)!! / 1.
inline Cotree gen_double_factorial(int h, NodeLabel root_label) {
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  Cotree t;
  detail::LeafCounter lc;
  t.set_root(detail::gen_dfact_rec(t, h, root_label, lc));
  return t;
}

namespace detail {

// Splits n leaves over a random number of children; each child of size >= 2
// recurses with the opposite label. Child order is left-to-right with leaf
// ids assigned ascending, which keeps the output canonical by construction.
inline int gen_random_rec(Cotree& t, int n, NodeLabel label, std::mt19937_64& rng,
                          LeafCounter& lc) {
  if (n == 1) return t.add_leaf(lc.next++);
  // c children, 2 <= c <= n. Plain modulo keeps the stream portable across
  // standard libraries, unlike std::uniform_int_distribution.
  int c = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
  std::vector<int> sizes(static_cast<std::size_t>(c), 1);
  for (int extra = 0; extra < n - c; ++extra)
    ++sizes[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(c))];
  int id = t.add_internal(label);
  for (int sz : sizes) t.add_child(id, gen_random_rec(t, sz, opposite(label), rng, lc));
  return id;
}

}  // namespace detail

/// Seed-deterministic random canonical cotree on n leaves.
inline Cotree gen_random_cotree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one leaf");
  std::mt19937_64 rng(seed);
  Cotree t;
  detail::LeafCounter lc;
  if (n == 1) {
    t.set_root(t.add_leaf(lc.next++));
    return t;
  }
  NodeLabel root = (rng() & 1u) ? NodeLabel::Series : NodeLabel::Parallel;
  t.set_root(detail::gen_random_rec(t, n, root, rng, lc));
  return t;
}

}  // namespace linco

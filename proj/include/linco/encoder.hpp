#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "linco/cotree.hpp"
#include "linco/models.hpp"
#include "linco/rank.hpp"

namespace linco {

/// Decomposition data for encoding a non-minimal node u of rank r: the
/// connected subtree T' of rank-r nodes below u, its bottoms u_0..u_{l-1},
/// a partition of T' into root-to-bottom paths, the "low" children hanging
/// off internal T' nodes, and the per-order block sequences.
struct SplitContext {
  int target = -1;
  int r = 0;
  std::vector<int> tprime;  // rank-r nodes reachable from target, preorder
  std::vector<int> u_min;   // T' bottoms (no rank-r child), DFS order
  std::vector<int> u_low;   // non-T' children of internal T' nodes
  std::vector<std::vector<int>> paths;  // paths[i] is top-down, ends at u_min[i]
  std::vector<int> path_index;          // node -> path id for T' nodes, else -1
  std::vector<int> low_path;            // node -> parent's path id for u_low nodes
  std::vector<char> in_tprime;
  std::vector<char> is_bottom;
  std::vector<std::vector<int>> block_orders;  // 2r+3 sequences over u_min + u_low
};

/// Two-order model for a series of l non-adjacent pairs (a_i, b_i) laid out
/// a_0,b_0,a_1,b_1,... in both orders. Every vertex is adjacent to everything
/// except its own partner. Degenerate pairs (l arbitrary >= 1) are allowed;
/// callers drop phantom partners via restrict_model.
inline LineModel pair_series_model(int l) {
  if (l < 1) throw std::invalid_argument("need at least one pair");
  const int n = 2 * l;
  LineModel m;
  m.flavor = Flavor::Closed;
  m.n = n;
  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
  m.orders = {identity, identity};
  m.intervals.assign(static_cast<std::size_t>(n), std::vector<Interval>(2));
  m.anchors.assign(static_cast<std::size_t>(n), std::nullopt);
  for (int i = 0; i < l; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    // First order: a_i covers the prefix through itself, b_i the suffix from
    // itself. Second order: a_i covers the suffix after its pair, b_i the
    // prefix before its pair (pinned to the empty range after pair 0 when
    // there is no such prefix).
    m.intervals[static_cast<std::size_t>(a)][0] = {0, a + 1};
    m.intervals[static_cast<std::size_t>(a)][1] = {b + 1, n};
    m.intervals[static_cast<std::size_t>(b)][0] = {b, n};
    m.intervals[static_cast<std::size_t>(b)][1] = i == 0 ? Interval{2, 2} : Interval{0, a};
    m.anchors[static_cast<std::size_t>(a)] = 1;
    m.anchors[static_cast<std::size_t>(b)] = 0;
  }
  return m;
}

namespace detail {

/// Per-encode immutable context: tree, ranks, Euler intervals, and the
/// left-to-right leaf layout (leaf_begin/leaf_cnt) that defines local ids.
struct EncoderState {
  const Cotree& t;
  const RankAnnotation& ann;
  std::vector<int> tin, tout;
  std::vector<int> leaf_begin;
  std::vector<int> leaf_cnt;

  bool in_subtree(int anc, int v) const {
    return tin[static_cast<std::size_t>(anc)] <= tin[static_cast<std::size_t>(v)] &&
           tin[static_cast<std::size_t>(v)] < tout[static_cast<std::size_t>(anc)];
  }
  int rank(int u) const { return ann.rank[static_cast<std::size_t>(u)]; }
  bool minimal(int u) const { return ann.minimal[static_cast<std::size_t>(u)] != 0; }
};

inline EncoderState make_state(const Cotree& t, const RankAnnotation& ann) {
  const int n = t.node_count();
  if (static_cast<int>(ann.rank.size()) != n)
    throw std::invalid_argument("rank annotation does not match the tree");
  EncoderState st{t, ann, {}, {}, {}, {}};
  st.tin.assign(static_cast<std::size_t>(n), 0);
  st.tout.assign(static_cast<std::size_t>(n), 0);
  st.leaf_begin.assign(static_cast<std::size_t>(n), 0);
  st.leaf_cnt.assign(static_cast<std::size_t>(n), 0);
  int timer = 0, leaf_ptr = 0;
  std::vector<std::pair<int, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (done) {
      st.tout[static_cast<std::size_t>(v)] = timer;
      st.leaf_cnt[static_cast<std::size_t>(v)] = leaf_ptr - st.leaf_begin[static_cast<std::size_t>(v)];
      continue;
    }
    st.tin[static_cast<std::size_t>(v)] = timer++;
    st.leaf_begin[static_cast<std::size_t>(v)] = leaf_ptr;
    const auto& nd = t.node(v);
    if (nd.is_leaf) {
      ++leaf_ptr;
      st.leaf_cnt[static_cast<std::size_t>(v)] = 1;
      st.tout[static_cast<std::size_t>(v)] = timer;
      continue;
    }
    stack.push_back({v, true});
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
      stack.push_back({*it, false});
  }
  return st;
}

inline LineModel relabel_model(const LineModel& local, const std::vector<int>& to_original) {
  LineModel out = local;
  for (auto& ord : out.orders)
    for (auto& v : ord) v = to_original[static_cast<std::size_t>(v)];
  for (int x = 0; x < local.n; ++x) {
    out.intervals[static_cast<std::size_t>(to_original[static_cast<std::size_t>(x)])] =
        local.intervals[static_cast<std::size_t>(x)];
    out.anchors[static_cast<std::size_t>(to_original[static_cast<std::size_t>(x)])] =
        local.anchors[static_cast<std::size_t>(x)];
  }
  return out;
}

inline LineModel encode_rank_zero_impl(const EncoderState& st, int u) {
  const auto& nd = st.t.node(u);
  LineModel m;
  m.flavor = Flavor::Closed;
  if (nd.is_leaf) {
    m.n = 1;
    m.orders = {{0}};
    m.intervals = {{Interval{0, 1}}};
    m.anchors = {0};
    return m;
  }
  // A rank-0 internal node has exactly two leaf children: any more children
  // or any internal child would push the antichain sum to 3.
  if (nd.children.size() != 2 || !st.t.node(nd.children[0]).is_leaf ||
      !st.t.node(nd.children[1]).is_leaf)
    throw std::logic_error("rank-0 internal node is not a leaf pair");
  m.n = 2;
  m.orders = {{0, 1}};
  m.intervals.assign(2, std::vector<Interval>(1));
  m.anchors.assign(2, std::nullopt);
  if (nd.label == NodeLabel::Series) {
    m.intervals[0][0] = {0, 2};
    m.intervals[1][0] = {0, 2};
    m.anchors[0] = 0;
    m.anchors[1] = 0;
  } else {
    m.intervals[0][0] = {0, 1};
    m.intervals[1][0] = {1, 2};
    m.anchors[1] = 0;  // the last vertex still reaches position n
  }
  return m;
}

inline LineModel encode_pair_series_impl(const EncoderState& st, int u) {
  const auto& nd = st.t.node(u);
  if (nd.is_leaf || nd.label != NodeLabel::Series || st.rank(u) != 1 || !st.minimal(u))
    throw std::invalid_argument("pair-series encoding needs a minimal rank-1 series node");
  const int l = static_cast<int>(nd.children.size());
  std::vector<int> real;
  for (int i = 0; i < l; ++i) {
    const auto& child = st.t.node(nd.children[static_cast<std::size_t>(i)]);
    if (child.is_leaf) {
      real.push_back(2 * i);  // the partner slot stays phantom
      continue;
    }
    if (child.label != NodeLabel::Parallel || child.children.size() != 2 ||
        !st.t.node(child.children[0]).is_leaf || !st.t.node(child.children[1]).is_leaf)
      throw std::logic_error("child of a minimal rank-1 series node is not a rank-0 pair");
    real.push_back(2 * i);
    real.push_back(2 * i + 1);
  }
  LineModel full = pair_series_model(l);
  if (static_cast<int>(real.size()) == 2 * l) return full;
  return restrict_model(full, real);
}

LineModel encode_node(const EncoderState& st, int u);  // forward

inline LineModel encode_minimal_series_impl(const EncoderState& st, int u) {
  const auto& nd = st.t.node(u);
  const int k = st.rank(u);
  if (nd.is_leaf || nd.label != NodeLabel::Series || k < 1 || !st.minimal(u))
    throw std::invalid_argument("blockwise series encoding needs a minimal series node of positive rank");
  const int width = 2 * k + 1;  // child models fit in 2(k-1)+3 orders
  const int n = st.leaf_cnt[static_cast<std::size_t>(u)];
  const int base = st.leaf_begin[static_cast<std::size_t>(u)];

  std::vector<LineModel> blocks;
  blocks.reserve(nd.children.size());
  for (int c : nd.children) {
    LineModel m = encode_node(st, c);
    if (m.order_count() > width) throw std::logic_error("child model exceeds the rank width bound");
    const int first_pad = m.order_count();
    LineModel padded = pad_orders(m, width);
    // Children assembled by disjoint union arrive without anchors; a padding
    // slot's empty interval already sits at position n, so it serves as one.
    for (int x = 0; x < padded.n; ++x)
      if (!padded.anchors[static_cast<std::size_t>(x)]) {
        if (first_pad >= width)
          throw std::logic_error("no padding slot available to anchor a vertex");
        padded.anchors[static_cast<std::size_t>(x)] = first_pad;
      }
    blocks.push_back(std::move(padded));
  }

  LineModel out;
  out.flavor = Flavor::Closed;
  out.n = n;
  out.orders.assign(static_cast<std::size_t>(width) + 1, {});
  out.intervals.assign(static_cast<std::size_t>(n),
                       std::vector<Interval>(static_cast<std::size_t>(width) + 1));
  out.anchors.assign(static_cast<std::size_t>(n), std::nullopt);

  for (int j = 0; j < width; ++j) {
    auto& sigma = out.orders[static_cast<std::size_t>(j)];
    sigma.reserve(static_cast<std::size_t>(n));
    for (std::size_t ci = 0; ci < blocks.size(); ++ci) {
      const LineModel& bm = blocks[ci];
      const int off = st.leaf_begin[static_cast<std::size_t>(nd.children[ci])] - base;
      for (int v : bm.orders[static_cast<std::size_t>(j)]) sigma.push_back(off + v);
      for (int x = 0; x < bm.n; ++x) {
        const Interval iv = bm.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
        const bool anchored_here = bm.anchors[static_cast<std::size_t>(x)] == j;
        // At its anchor slot a vertex sees its whole block tail; under a
        // series parent that right-extends over all later blocks.
        out.intervals[static_cast<std::size_t>(off + x)][static_cast<std::size_t>(j)] =
            anchored_here ? Interval{off + iv.lo, n} : Interval{off + iv.lo, off + iv.hi};
      }
    }
  }
  // Closing order: blocks in tree order, each vertex covering everything
  // strictly before its own block.
  auto& last = out.orders[static_cast<std::size_t>(width)];
  last.reserve(static_cast<std::size_t>(n));
  for (std::size_t ci = 0; ci < blocks.size(); ++ci) {
    const int off = st.leaf_begin[static_cast<std::size_t>(nd.children[ci])] - base;
    for (int x = 0; x < blocks[ci].n; ++x) {
      last.push_back(off + x);
      out.intervals[static_cast<std::size_t>(off + x)][static_cast<std::size_t>(width)] = {0, off};
    }
    for (int x = 0; x < blocks[ci].n; ++x)
      out.anchors[static_cast<std::size_t>(off + x)] = blocks[ci].anchors[static_cast<std::size_t>(x)];
  }
  return out;
}

// Lays out order j of the split encoding: the block sequence, each block's
// start position, and the position spans of the internal T' nodes.
inline void expand_order(const EncoderState& st, const SplitContext& ctx, int j, int z, int& cursor,
                         std::vector<int>& blocks, std::vector<int>& starts,
                         std::vector<int>& span_start, std::vector<int>& span_end) {
  if (!ctx.in_tprime[static_cast<std::size_t>(z)] || ctx.is_bottom[static_cast<std::size_t>(z)]) {
    blocks.push_back(z);
    starts.push_back(cursor);
    cursor += st.leaf_cnt[static_cast<std::size_t>(z)];
    return;
  }
  span_start[static_cast<std::size_t>(z)] = cursor;
  const auto& nd = st.t.node(z);
  const int l = static_cast<int>(ctx.u_min.size());
  const int last = 2 * ctx.r + 2;
  // The last order reuses, at every internal T' node, the local child order
  // of that node's own path; earlier orders steer toward their path's bottom.
  const int steer_path = j == last ? ctx.path_index[static_cast<std::size_t>(z)] : (j < l ? j : -1);
  int cstar = -1;
  if (steer_path >= 0) {
    const int bottom = ctx.u_min[static_cast<std::size_t>(steer_path)];
    if (st.in_subtree(z, bottom) && z != bottom)
      for (int c : nd.children)
        if (st.in_subtree(c, bottom)) {
          cstar = c;
          break;
        }
  }
  auto descend = [&](int c) {
    expand_order(st, ctx, j, c, cursor, blocks, starts, span_start, span_end);
  };
  if (cstar >= 0 && nd.label == NodeLabel::Series) descend(cstar);
  for (int c : nd.children)
    if (c != cstar) descend(c);
  if (cstar >= 0 && nd.label == NodeLabel::Parallel) descend(cstar);
  span_end[static_cast<std::size_t>(z)] = cursor;
}

inline SplitContext build_split_context_impl(const EncoderState& st, int u) {
  const int r = st.rank(u);
  if (r < 1 || st.minimal(u))
    throw std::invalid_argument("split encoding needs a non-minimal node of positive rank");
  const int n_nodes = st.t.node_count();
  SplitContext ctx;
  ctx.target = u;
  ctx.r = r;
  ctx.path_index.assign(static_cast<std::size_t>(n_nodes), -1);
  ctx.low_path.assign(static_cast<std::size_t>(n_nodes), -1);
  ctx.in_tprime.assign(static_cast<std::size_t>(n_nodes), 0);
  ctx.is_bottom.assign(static_cast<std::size_t>(n_nodes), 0);

  // T' = rank-r nodes connected to u, preorder.
  std::vector<int> stack{u};
  ctx.in_tprime[static_cast<std::size_t>(u)] = 1;
  while (!stack.empty()) {
    int z = stack.back();
    stack.pop_back();
    ctx.tprime.push_back(z);
    const auto& kids = st.t.node(z).children;
    bool has_rank_r_child = false;
    for (int c : kids) has_rank_r_child = has_rank_r_child || st.rank(c) == r;
    if (!has_rank_r_child) {
      ctx.is_bottom[static_cast<std::size_t>(z)] = 1;
      ctx.u_min.push_back(z);
      continue;
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
      if (st.rank(*it) == r) {
        ctx.in_tprime[static_cast<std::size_t>(*it)] = 1;
        stack.push_back(*it);
      }
  }
  const int l = static_cast<int>(ctx.u_min.size());
  if (l > 2 * r + 2)
    throw std::logic_error("more path bottoms than the rank bound allows; rank computation broken");

  // Greedy path partition: each bottom claims its still-unassigned ancestors.
  for (int i = 0; i < l; ++i) {
    std::vector<int> chain;
    int z = ctx.u_min[static_cast<std::size_t>(i)];
    while (z != -1 && ctx.in_tprime[static_cast<std::size_t>(z)] &&
           ctx.path_index[static_cast<std::size_t>(z)] == -1) {
      ctx.path_index[static_cast<std::size_t>(z)] = i;
      chain.push_back(z);
      z = st.t.node(z).parent;
    }
    std::reverse(chain.begin(), chain.end());
    ctx.paths.push_back(std::move(chain));
  }

  for (int z : ctx.tprime) {
    if (ctx.is_bottom[static_cast<std::size_t>(z)]) continue;
    for (int c : st.t.node(z).children)
      if (st.rank(c) < r) {
        ctx.u_low.push_back(c);
        ctx.low_path[static_cast<std::size_t>(c)] = ctx.path_index[static_cast<std::size_t>(z)];
      }
  }

  std::vector<int> span_s(static_cast<std::size_t>(n_nodes), 0);
  std::vector<int> span_e(static_cast<std::size_t>(n_nodes), 0);
  for (int j = 0; j <= 2 * r + 2; ++j) {
    std::vector<int> blocks, starts;
    int cursor = 0;
    expand_order(st, ctx, j, u, cursor, blocks, starts, span_s, span_e);
    ctx.block_orders.push_back(std::move(blocks));
  }
  return ctx;
}

inline LineModel encode_split_impl(const EncoderState& st, int u) {
  const SplitContext ctx = build_split_context_impl(st, u);
  const int r = ctx.r;
  const int K = 2 * r + 2;  // orders 0..K-1 carry the paths, order K closes
  const int n = st.leaf_cnt[static_cast<std::size_t>(u)];
  const int base = st.leaf_begin[static_cast<std::size_t>(u)];

  std::unordered_map<int, LineModel> model_of;
  for (int b : ctx.u_min) {
    LineModel m = encode_node(st, b);
    if (m.order_count() > K) throw std::logic_error("bottom block model exceeds the width bound");
    model_of.emplace(b, pad_orders(m, K));
  }
  for (int b : ctx.u_low) {
    LineModel m = encode_node(st, b);
    if (m.order_count() > K - 1) throw std::logic_error("low block model exceeds the width bound");
    model_of.emplace(b, pad_orders(m, K - 1));
  }

  LineModel out;
  out.flavor = Flavor::Closed;
  out.n = n;
  out.orders.assign(static_cast<std::size_t>(K) + 1, {});
  out.intervals.assign(static_cast<std::size_t>(n),
                       std::vector<Interval>(static_cast<std::size_t>(K) + 1));
  out.anchors.assign(static_cast<std::size_t>(n), std::nullopt);

  std::vector<int> span_s(static_cast<std::size_t>(st.t.node_count()), 0);
  std::vector<int> span_e(static_cast<std::size_t>(st.t.node_count()), 0);
  for (int j = 0; j <= K; ++j) {
    std::vector<int> blocks, starts;
    int cursor = 0;
    expand_order(st, ctx, j, u, cursor, blocks, starts, span_s, span_e);
    if (cursor != n) throw std::logic_error("block layout does not cover the subtree");

    auto& sigma = out.orders[static_cast<std::size_t>(j)];
    sigma.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const int b = blocks[bi];
      const int S = starts[bi];
      const int nb = st.leaf_cnt[static_cast<std::size_t>(b)];
      const int off = st.leaf_begin[static_cast<std::size_t>(b)] - base;
      const bool bottom = ctx.is_bottom[static_cast<std::size_t>(b)] != 0;
      const int path = bottom ? ctx.path_index[static_cast<std::size_t>(b)]
                              : ctx.low_path[static_cast<std::size_t>(b)];
      const LineModel& bm = model_of.at(b);

      // Which of the block's own model orders this slot replays; -1 means the
      // block appears in ascending local order instead.
      int slot;
      if (j == K)
        slot = bottom ? path : -1;
      else if (j == path)
        slot = -1;
      else if (bottom)
        slot = j;
      else
        slot = j < path ? j : j - 1;

      if (slot >= 0) {
        const auto& bo = bm.orders[static_cast<std::size_t>(slot)];
        for (int q = 0; q < nb; ++q) sigma[static_cast<std::size_t>(S + q)] = off + bo[static_cast<std::size_t>(q)];
      } else {
        for (int q = 0; q < nb; ++q) sigma[static_cast<std::size_t>(S + q)] = off + q;
      }

      const int parent = st.t.node(b).parent;
      const bool series_parent =
          parent >= 0 && st.t.node(parent).label == NodeLabel::Series;
      for (int lx = 0; lx < nb; ++lx) {
        const int gx = off + lx;
        Interval giv;
        if (slot >= 0) {
          const Interval iv = bm.intervals[static_cast<std::size_t>(lx)][static_cast<std::size_t>(slot)];
          giv = {S + iv.lo, S + iv.hi};
        } else if (j != K) {
          // Path order of this block: the external suffix. Under a series
          // parent everything right of the block is a neighbour; under a
          // parallel parent the block's siblings must be skipped first.
          if (bottom || series_parent)
            giv = {S + nb, n};
          else
            giv = {span_e[static_cast<std::size_t>(parent)], n};
          out.anchors[static_cast<std::size_t>(gx)] = j;
        } else {
          // Closing order, low blocks only: cover the parent's span left of
          // the block (series parent), or nothing (parallel parent).
          giv = series_parent ? Interval{span_s[static_cast<std::size_t>(parent)], S}
                              : Interval{S, S};
        }
        out.intervals[static_cast<std::size_t>(gx)][static_cast<std::size_t>(j)] = giv;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (!out.anchors[static_cast<std::size_t>(x)])
      throw std::logic_error("split encoding left a vertex without an anchor");
  return out;
}

inline LineModel encode_node(const EncoderState& st, int u) {
  const int r = st.rank(u);
  LineModel m;
  if (r == 0) {
    m = encode_rank_zero_impl(st, u);
  } else if (st.minimal(u)) {
    if (st.t.node(u).label == NodeLabel::Series) {
      m = r == 1 ? encode_pair_series_impl(st, u) : encode_minimal_series_impl(st, u);
    } else {
      // Minimal parallel node: the graph is the disjoint union of the
      // children, and so is the model.
      std::vector<LineModel> parts;
      parts.reserve(st.t.node(u).children.size());
      for (int c : st.t.node(u).children) parts.push_back(encode_node(st, c));
      m = concat_disjoint_union(parts);
    }
  } else {
    m = encode_split_impl(st, u);
  }
  const int limit = r == 0 ? 1 : (st.minimal(u) ? 2 * r + 2 : 2 * r + 3);
  if (m.order_count() > limit) throw std::logic_error("encoder exceeded its order bound");
  return m;
}

}  // namespace detail

/// Worst-case order count promised for a tree with this root annotation.
inline int encoder_order_bound(const RankAnnotation& ann, int u) {
  const int r = ann.rank.at(static_cast<std::size_t>(u));
  if (r == 0) return 1;
  return ann.minimal[static_cast<std::size_t>(u)] ? 2 * r + 2 : 2 * r + 3;
}

/// Encodes the whole cotree; the returned closed-flavor model is over the
/// original leaf ids 0..n-1 and uses at most 2*rank+3 orders.
inline LineModel encode(const Cotree& t, const RankAnnotation& ann) {
  std::string why;
  if (!check_cotree(t, &why)) throw std::invalid_argument("invalid cotree: " + why);
  detail::EncoderState st = detail::make_state(t, ann);
  LineModel local = detail::encode_node(st, t.root());
  return detail::relabel_model(local, subtree_leaves(t, t.root()));
}

inline LineModel encode(const Cotree& t) { return encode(t, factorial_rank(t)); }

// The per-node entry points below return models over local ids: leaf number
// i of the model is the i-th leaf of the subtree in left-to-right order
// (see subtree_cotree for a matching standalone tree).

inline LineModel encode_rank_zero(const Cotree& t, const RankAnnotation& ann, int u) {
  detail::EncoderState st = detail::make_state(t, ann);
  if (ann.rank.at(static_cast<std::size_t>(u)) != 0)
    throw std::invalid_argument("node does not have rank 0");
  return detail::encode_rank_zero_impl(st, u);
}

inline LineModel encode_pair_series(const Cotree& t, const RankAnnotation& ann, int u) {
  detail::EncoderState st = detail::make_state(t, ann);
  return detail::encode_pair_series_impl(st, u);
}

inline LineModel encode_minimal_series(const Cotree& t, const RankAnnotation& ann, int u) {
  detail::EncoderState st = detail::make_state(t, ann);
  return detail::encode_minimal_series_impl(st, u);
}

inline SplitContext build_split_context(const Cotree& t, const RankAnnotation& ann, int u) {
  detail::EncoderState st = detail::make_state(t, ann);
  return detail::build_split_context_impl(st, u);
}

inline LineModel encode_split(const Cotree& t, const RankAnnotation& ann, int u) {
  detail::EncoderState st = detail::make_state(t, ann);
  return detail::encode_split_impl(st, u);
}

}  // namespace linco

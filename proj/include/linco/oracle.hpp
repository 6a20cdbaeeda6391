#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "linco/graph.hpp"
#include "linco/models.hpp"

namespace linco {

struct LinearityResult {
  std::optional<int> value;        // least p <= p_max with a valid model, if any
  std::optional<LineModel> witness;
};

struct ContiguityResult {
  std::optional<int> value;
  std::optional<ContiguityModel> witness;
};

namespace detail {

struct Run {
  int lo = 0, hi = 0;
  std::uint32_t mask = 0;
};

// Maximal runs of the target vertex set along one order.
inline std::vector<Run> target_runs(const std::vector<int>& order, std::uint32_t target) {
  std::vector<Run> runs;
  const int n = static_cast<int>(order.size());
  int p = 0;
  while (p < n) {
    if (!(target >> order[static_cast<std::size_t>(p)] & 1u)) {
      ++p;
      continue;
    }
    Run r;
    r.lo = p;
    while (p < n && (target >> order[static_cast<std::size_t>(p)] & 1u)) {
      r.mask |= 1u << order[static_cast<std::size_t>(p)];
      ++p;
    }
    r.hi = p;
    runs.push_back(r);
  }
  return runs;
}

// Orders with first element smaller than last: every tuple of orders stays
// valid under reversing any one order and under permuting the tuple, so this
// set of representatives loses no models.
inline std::vector<std::vector<int>> canonical_orders(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    if (n == 1 || perm.front() < perm.back()) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<std::uint32_t> neighborhood_masks(const Graph& g, bool closed) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> target(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    std::uint32_t m = closed ? 1u << x : 0u;
    for (int y : g.neighbors(x)) m |= 1u << y;
    target[static_cast<std::size_t>(x)] = m;
  }
  return target;
}

}  // namespace detail

/// Exhaustive search for the least p <= p_max admitting a valid p-order
/// model. Symmetry reduction: each order is used with its smaller endpoint
/// first, and tuples are enumerated as sorted multisets. The returned witness
/// passes verify_line_model by construction.
inline LinearityResult bruteforce_linearity(const Graph& g, int p_max, bool closed,
                                            bool override_guard = false) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  if (p_max > 3)
    throw guard_error("linearity oracle guard: p_max=" + std::to_string(p_max) +
                      " exceeds the hard limit 3");
  if (n > 7 && !override_guard)
    throw guard_error("linearity oracle guard: n=" + std::to_string(n) +
                      " exceeds the limit 7; pass the override to search anyway");

  const std::vector<std::uint32_t> target = detail::neighborhood_masks(g, closed);
  const std::vector<std::vector<int>> orders = detail::canonical_orders(n);
  const int m_orders = static_cast<int>(orders.size());

  std::vector<std::vector<std::vector<detail::Run>>> runs(static_cast<std::size_t>(m_orders));
  std::vector<std::vector<std::uint32_t>> reach(static_cast<std::size_t>(m_orders));
  for (int oi = 0; oi < m_orders; ++oi) {
    runs[static_cast<std::size_t>(oi)].resize(static_cast<std::size_t>(n));
    reach[static_cast<std::size_t>(oi)].assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
      auto rs = detail::target_runs(orders[static_cast<std::size_t>(oi)],
                                    target[static_cast<std::size_t>(x)]);
      std::uint32_t u = 0;
      for (const auto& r : rs) u |= r.mask;
      reach[static_cast<std::size_t>(oi)][static_cast<std::size_t>(x)] = u;
      runs[static_cast<std::size_t>(oi)][static_cast<std::size_t>(x)] = std::move(rs);
    }
  }

  // choice[x][d]: run index picked in tuple slot d, or -1 for an empty interval
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(n));
  std::vector<int> pick;

  auto cover_vertex = [&](int x) -> bool {
    const int p = static_cast<int>(pick.size());
    auto& ch = choice[static_cast<std::size_t>(x)];
    ch.assign(static_cast<std::size_t>(p), -1);
    const std::uint32_t want = target[static_cast<std::size_t>(x)];
    if (want == 0) return true;
    std::uint32_t all = 0;
    for (int d = 0; d < p; ++d)
      all |= reach[static_cast<std::size_t>(pick[static_cast<std::size_t>(d)])][static_cast<std::size_t>(x)];
    if ((all & want) != want) return false;

    std::function<bool(int, std::uint32_t)> dfs = [&](int d, std::uint32_t acc) -> bool {
      if (acc == want) return true;
      if (d == p) return false;
      const auto& rs =
          runs[static_cast<std::size_t>(pick[static_cast<std::size_t>(d)])][static_cast<std::size_t>(x)];
      for (std::size_t ri = 0; ri < rs.size(); ++ri) {
        ch[static_cast<std::size_t>(d)] = static_cast<int>(ri);
        if (dfs(d + 1, acc | rs[ri].mask)) return true;
      }
      ch[static_cast<std::size_t>(d)] = -1;
      return dfs(d + 1, acc);
    };
    return dfs(0, 0);
  };

  auto check_tuple = [&]() -> bool {
    for (int x = 0; x < n; ++x)
      if (!cover_vertex(x)) return false;
    return true;
  };

  auto build_witness = [&]() -> LineModel {
    const int p = static_cast<int>(pick.size());
    LineModel w;
    w.flavor = closed ? Flavor::Closed : Flavor::Open;
    w.n = n;
    for (int d = 0; d < p; ++d) w.orders.push_back(orders[static_cast<std::size_t>(pick[static_cast<std::size_t>(d)])]);
    w.intervals.assign(static_cast<std::size_t>(n), std::vector<Interval>(static_cast<std::size_t>(p)));
    w.anchors.assign(static_cast<std::size_t>(n), std::nullopt);
    for (int x = 0; x < n; ++x)
      for (int d = 0; d < p; ++d) {
        int ri = choice[static_cast<std::size_t>(x)][static_cast<std::size_t>(d)];
        if (ri < 0) continue;
        const detail::Run& r =
            runs[static_cast<std::size_t>(pick[static_cast<std::size_t>(d)])][static_cast<std::size_t>(x)]
                [static_cast<std::size_t>(ri)];
        w.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(d)] = {r.lo, r.hi};
      }
    return w;
  };

  for (int p = 1; p <= p_max; ++p) {
    pick.assign(static_cast<std::size_t>(p), 0);
    std::function<bool(int, int)> enumerate = [&](int depth, int start) -> bool {
      if (depth == p) return check_tuple();
      for (int i = start; i < m_orders; ++i) {
        pick[static_cast<std::size_t>(depth)] = i;
        if (enumerate(depth + 1, i)) return true;
      }
      return false;
    };
    if (enumerate(0, 0)) {
      LinearityResult res;
      res.value = p;
      res.witness = build_witness();
      return res;
    }
  }
  return {};
}

/// Minimum over all orders of the largest per-vertex maximal-run count; the
/// witness keeps the best order with every vertex's maximal runs.
inline ContiguityResult bruteforce_contiguity(const Graph& g, bool closed = true) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > 8)
    throw guard_error("contiguity oracle guard: n=" + std::to_string(n) + " exceeds the limit 8");

  const std::vector<std::uint32_t> target = detail::neighborhood_masks(g, closed);
  const std::vector<std::vector<int>> orders = detail::canonical_orders(n);

  int best_k = -1;
  std::size_t best_oi = 0;
  for (std::size_t oi = 0; oi < orders.size(); ++oi) {
    int k = 0;
    for (int x = 0; x < n && (best_k < 0 || k < best_k); ++x)
      k = std::max(k, static_cast<int>(detail::target_runs(orders[oi],
                                                           target[static_cast<std::size_t>(x)])
                                           .size()));
    if (best_k < 0 || k < best_k) {
      best_k = k;
      best_oi = oi;
    }
  }

  ContiguityResult res;
  res.value = std::max(best_k, 1);
  ContiguityModel w;
  w.n = n;
  w.order = orders[best_oi];
  w.intervals.assign(static_cast<std::size_t>(n), {});
  for (int x = 0; x < n; ++x)
    for (const auto& r : detail::target_runs(orders[best_oi], target[static_cast<std::size_t>(x)]))
      w.intervals[static_cast<std::size_t>(x)].push_back({r.lo, r.hi});
  res.witness = std::move(w);
  return res;
}

}  // namespace linco

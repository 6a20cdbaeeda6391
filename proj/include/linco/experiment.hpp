#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linco/cotree.hpp"
#include "linco/encoder.hpp"
#include "linco/generators.hpp"
#include "linco/models.hpp"
#include "linco/oracle.hpp"
#include "linco/rank.hpp"

namespace linco {

/// Contiguity upper bound from one fixed order: the left-to-right leaf order
/// of the tree. Computed structurally (closed neighbourhoods are unions of
/// sibling-subtree ranges plus the vertex itself), so it works at any scale.
inline int contiguity_upper_left_right(const Cotree& t) {
  const int n_nodes = t.node_count();
  std::vector<int> lr_begin(static_cast<std::size_t>(n_nodes), 0);
  std::vector<int> lr_cnt(static_cast<std::size_t>(n_nodes), 0);
  std::vector<int> leaf_at;  // leaf_at[pos] = arena node id
  std::vector<std::pair<int, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (done) {
      lr_cnt[static_cast<std::size_t>(v)] =
          static_cast<int>(leaf_at.size()) - lr_begin[static_cast<std::size_t>(v)];
      continue;
    }
    lr_begin[static_cast<std::size_t>(v)] = static_cast<int>(leaf_at.size());
    const auto& nd = t.node(v);
    if (nd.is_leaf) {
      leaf_at.push_back(v);
      lr_cnt[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    stack.push_back({v, true});
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
      stack.push_back({*it, false});
  }

  int worst = 1;
  std::vector<std::pair<int, int>> ranges;
  for (std::size_t pos = 0; pos < leaf_at.size(); ++pos) {
    ranges.clear();
    ranges.push_back({static_cast<int>(pos), static_cast<int>(pos) + 1});
    int child = leaf_at[pos];
    int up = t.node(child).parent;
    while (up != -1) {
      const auto& nd = t.node(up);
      if (nd.label == NodeLabel::Series)
        for (int c : nd.children) {
          if (c == child) continue;
          ranges.push_back({lr_begin[static_cast<std::size_t>(c)],
                            lr_begin[static_cast<std::size_t>(c)] + lr_cnt[static_cast<std::size_t>(c)]});
        }
      child = up;
      up = nd.parent;
    }
    std::sort(ranges.begin(), ranges.end());
    int runs = 0, cur_end = -1;
    for (auto [lo, hi] : ranges) {
      if (lo > cur_end) {
        ++runs;
        cur_end = hi;
      } else {
        cur_end = std::max(cur_end, hi);
      }
    }
    worst = std::max(worst, runs);
  }
  return worst;
}

struct ExperimentRow {
  int h = 0;
  long long n = 0;
  int rank = 0;
  int p_encoder = 0;
  std::optional<int> cont_lower;  // exact oracle value, small heights only
  int cont_upper = 0;             // fixed-order heuristic bound
  long long size_lin = 0;         // 3 * p_encoder * n
  long long size_adj = 0;         // n + 2m
};

/// Encodes the alternating complete binary family for h = 1..h_max, verifies
/// each model on min(n, sample_cap) sampled vertices against the tree, and
/// tabulates encoding sizes next to the adjacency-list footprint.
inline std::vector<ExperimentRow> experiment_ratio(int h_max, std::uint64_t seed = 0,
                                                   int sample_cap = 512) {
  if (h_max < 1) throw std::invalid_argument("h_max must be at least 1");
  if (h_max > 20)
    throw guard_error("experiment guard: h_max=" + std::to_string(h_max) +
                      " exceeds the limit 20");
  std::mt19937_64 rng(seed);
  std::vector<ExperimentRow> rows;
  for (int h = 1; h <= h_max; ++h) {
    const Cotree t = gen_binary_cotree(h, NodeLabel::Series);
    const RankAnnotation ann = factorial_rank(t);
    const LineModel m = encode(t, ann);
    const int n = t.leaf_count();
    if (m.order_count() > 2 * ann.root_rank + 3)
      throw std::logic_error("encoder exceeded its order bound");

    const std::vector<int> leaf_map = leaf_of_vertex(t);
    std::vector<int> sample(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sample[static_cast<std::size_t>(i)] = i;
    const int take = std::min(n, sample_cap);
    for (int i = 0; i < take; ++i) {
      // partial Fisher-Yates: the first `take` entries are a uniform draw
      std::size_t j = static_cast<std::size_t>(i) +
                      static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(sample[static_cast<std::size_t>(i)], sample[j]);
      const int x = sample[static_cast<std::size_t>(i)];
      if (query_closed_neighborhood(m, x) != cotree_closed_neighborhood(t, leaf_map, x))
        throw std::logic_error("sampled verification failed at h=" + std::to_string(h));
    }

    ExperimentRow row;
    row.h = h;
    row.n = n;
    row.rank = ann.root_rank;
    row.p_encoder = m.order_count();
    if (h <= 3) row.cont_lower = bruteforce_contiguity(cotree_to_graph(t), true).value;
    row.cont_upper = contiguity_upper_left_right(t);
    row.size_lin = encoding_size_integers(EncodingKind::Linearity, n, m.order_count());
    row.size_adj = static_cast<long long>(n) + 2LL * static_cast<long long>(cotree_edge_count(t));
    rows.push_back(row);
  }
  return rows;
}

inline std::string format_experiment_table(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "h\tn\trank\tp_encoder\tcont_lower\tcont_upper\tsize_lin\tsize_adj\n";
  for (const auto& r : rows) {
    out << r.h << '\t' << r.n << '\t' << r.rank << '\t' << r.p_encoder << '\t';
    if (r.cont_lower)
      out << *r.cont_lower;
    else
      out << '-';
    out << '\t' << r.cont_upper << '\t' << r.size_lin << '\t' << r.size_adj << '\n';
  }
  return out.str();
}

struct BenchReport {
  int count = 0;
  std::vector<int> mismatched;  // vertices where model and adjacency disagree
  double model_ns_per_query = 0;
  double adj_ns_per_query = 0;
  bool ok() const { return mismatched.empty(); }
};

/// Answers `count` seeded random closed-neighbourhood queries through the
/// model and through adjacency lists, checking both agree.
inline BenchReport bench_queries(const LineModel& m, const Graph& g, int count,
                                 std::uint64_t seed = 0) {
  if (m.n != g.vertex_count())
    throw std::invalid_argument("dimension mismatch between model and graph");
  if (count < 0) throw std::invalid_argument("negative query count");
  BenchReport rep;
  rep.count = count;
  std::mt19937_64 rng(seed);
  using clock = std::chrono::steady_clock;
  long long model_total = 0, adj_total = 0;
  for (int q = 0; q < count; ++q) {
    const int x = static_cast<int>(rng() % static_cast<std::uint64_t>(m.n));
    const auto t0 = clock::now();
    const std::vector<int> via_model = query_closed_neighborhood(m, x);
    const auto t1 = clock::now();
    const std::vector<int> via_adj = g.closed_neighbors(x);
    const auto t2 = clock::now();
    model_total += std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    adj_total += std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
    if (via_model != via_adj) rep.mismatched.push_back(x);
  }
  if (count > 0) {
    rep.model_ns_per_query = static_cast<double>(model_total) / count;
    rep.adj_ns_per_query = static_cast<double>(adj_total) / count;
  }
  return rep;
}

}  // namespace linco

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linco/graph.hpp"

namespace linco {

/// Half-open position range [lo, hi) inside one vertex order.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo >= hi; }
  int length() const { return hi > lo ? hi - lo : 0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Flavor { Closed, Open };

/// p vertex orders plus one interval per vertex per order. A model is valid
/// for a graph when, for every vertex x, the union of the vertices covered by
/// its p intervals is exactly N[x] (closed flavor) or N(x) (open flavor).
/// anchors[x], when set, names an order where x's interval must end at
/// position n ("x sees everything to its right" in that order).
struct LineModel {
  Flavor flavor = Flavor::Closed;
  int n = 0;
  std::vector<std::vector<int>> orders;          // p rows, each a permutation of 0..n-1
  std::vector<std::vector<Interval>> intervals;  // n rows of p intervals
  std::vector<std::optional<int>> anchors;       // n entries, order index or nullopt

  int order_count() const { return static_cast<int>(orders.size()); }
};

/// One vertex order with a list of intervals per vertex; valid when every
/// vertex's interval union is exactly its (closed or open) neighbourhood.
struct ContiguityModel {
  int n = 0;
  std::vector<int> order;
  std::vector<std::vector<Interval>> intervals;  // n rows, arbitrary length

  int max_intervals() const {
    int k = 0;
    for (const auto& row : intervals) k = std::max(k, static_cast<int>(row.size()));
    return k;
  }
};

struct Violation {
  int vertex = -1;
  std::vector<int> missing;  // in the neighbourhood, not covered
  std::vector<int> extra;    // covered, not in the neighbourhood
  bool bad_anchor = false;   // anchored interval does not reach position n
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

namespace detail {

inline void require_permutation(const std::vector<int>& order, int n, const char* what) {
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument(std::string(what) + ": order length differs from n");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument(std::string(what) + ": order is not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

inline void require_structure(const LineModel& m) {
  if (m.n < 1) throw std::invalid_argument("line model: n must be positive");
  if (m.order_count() < 1) throw std::invalid_argument("line model: need at least one order");
  for (const auto& ord : m.orders) require_permutation(ord, m.n, "line model");
  if (static_cast<int>(m.intervals.size()) != m.n)
    throw std::invalid_argument("line model: need one interval row per vertex");
  for (const auto& row : m.intervals) {
    if (static_cast<int>(row.size()) != m.order_count())
      throw std::invalid_argument("line model: need one interval per order");
    for (const auto& iv : row)
      if (iv.lo < 0 || iv.lo > iv.hi || iv.hi > m.n)
        throw std::invalid_argument("line model: interval out of bounds");
  }
  if (static_cast<int>(m.anchors.size()) != m.n)
    throw std::invalid_argument("line model: need one anchor slot per vertex");
  for (const auto& a : m.anchors)
    if (a && (*a < 0 || *a >= m.order_count()))
      throw std::invalid_argument("line model: anchor order index out of range");
}

inline void require_structure(const ContiguityModel& m) {
  if (m.n < 1) throw std::invalid_argument("contiguity model: n must be positive");
  require_permutation(m.order, m.n, "contiguity model");
  if (static_cast<int>(m.intervals.size()) != m.n)
    throw std::invalid_argument("contiguity model: need one interval row per vertex");
  for (const auto& row : m.intervals)
    for (const auto& iv : row)
      if (iv.lo < 0 || iv.lo > iv.hi || iv.hi > m.n)
        throw std::invalid_argument("contiguity model: interval out of bounds");
}

inline void set_difference_into(const std::vector<int>& a, const std::vector<int>& b,
                                std::vector<int>& out) {
  out.clear();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

}  // namespace detail

/// Exact check of a line model against a graph. Structural defects (wrong
/// sizes, non-permutations, out-of-range intervals) throw; semantic defects
/// are reported per vertex with the exact set differences.
inline VerificationReport verify_line_model(const Graph& g, const LineModel& m) {
  if (m.n != g.vertex_count())
    throw std::invalid_argument("dimension mismatch: model has n=" + std::to_string(m.n) +
                                ", graph has n=" + std::to_string(g.vertex_count()));
  detail::require_structure(m);

  VerificationReport report;
  std::vector<char> mark(static_cast<std::size_t>(m.n), 0);
  std::vector<int> covered;
  for (int x = 0; x < m.n; ++x) {
    covered.clear();
    for (int j = 0; j < m.order_count(); ++j) {
      const Interval iv = m.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
      for (int pos = iv.lo; pos < iv.hi; ++pos) {
        int v = m.orders[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos)];
        if (!mark[static_cast<std::size_t>(v)]) {
          mark[static_cast<std::size_t>(v)] = 1;
          covered.push_back(v);
        }
      }
    }
    std::sort(covered.begin(), covered.end());
    const std::vector<int> target =
        m.flavor == Flavor::Closed ? g.closed_neighbors(x) : g.neighbors(x);
    Violation v;
    v.vertex = x;
    detail::set_difference_into(target, covered, v.missing);
    detail::set_difference_into(covered, target, v.extra);
    if (auto a = m.anchors[static_cast<std::size_t>(x)])
      v.bad_anchor = m.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(*a)].hi != m.n;
    if (!v.missing.empty() || !v.extra.empty() || v.bad_anchor) {
      report.ok = false;
      report.violations.push_back(std::move(v));
    }
    for (int c : covered) mark[static_cast<std::size_t>(c)] = 0;
  }
  return report;
}

inline VerificationReport verify_contiguity_model(const Graph& g, const ContiguityModel& m,
                                                  bool closed = true) {
  if (m.n != g.vertex_count())
    throw std::invalid_argument("dimension mismatch: model has n=" + std::to_string(m.n) +
                                ", graph has n=" + std::to_string(g.vertex_count()));
  detail::require_structure(m);

  VerificationReport report;
  std::vector<char> mark(static_cast<std::size_t>(m.n), 0);
  std::vector<int> covered;
  for (int x = 0; x < m.n; ++x) {
    covered.clear();
    for (const Interval& iv : m.intervals[static_cast<std::size_t>(x)])
      for (int pos = iv.lo; pos < iv.hi; ++pos) {
        int v = m.order[static_cast<std::size_t>(pos)];
        if (!mark[static_cast<std::size_t>(v)]) {
          mark[static_cast<std::size_t>(v)] = 1;
          covered.push_back(v);
        }
      }
    std::sort(covered.begin(), covered.end());
    const std::vector<int> target = closed ? g.closed_neighbors(x) : g.neighbors(x);
    Violation v;
    v.vertex = x;
    detail::set_difference_into(target, covered, v.missing);
    detail::set_difference_into(covered, target, v.extra);
    if (!v.missing.empty() || !v.extra.empty()) {
      report.ok = false;
      report.violations.push_back(std::move(v));
    }
    for (int c : covered) mark[static_cast<std::size_t>(c)] = 0;
  }
  return report;
}

/// Decodes N[x] from a closed-flavor model without touching any graph.
inline std::vector<int> query_closed_neighborhood(const LineModel& m, int x) {
  if (m.flavor != Flavor::Closed)
    throw std::invalid_argument("query needs a closed-flavor model");
  if (x < 0 || x >= m.n) throw std::out_of_range("vertex id out of range");
  std::vector<int> out;
  for (int j = 0; j < m.order_count(); ++j) {
    const Interval iv = m.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
    for (int pos = iv.lo; pos < iv.hi; ++pos)
      out.push_back(m.orders[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos)]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Closed model -> open model with 2p orders: each order is kept twice, and
/// each interval is split into its part strictly left and strictly right of
/// the vertex's own position. Anchors do not survive the split.
inline LineModel closed_to_open(const LineModel& m) {
  if (m.flavor != Flavor::Closed) throw std::invalid_argument("input model must be closed-flavor");
  detail::require_structure(m);
  LineModel out;
  out.flavor = Flavor::Open;
  out.n = m.n;
  out.orders.reserve(static_cast<std::size_t>(2 * m.order_count()));
  for (const auto& ord : m.orders) {
    out.orders.push_back(ord);
    out.orders.push_back(ord);
  }
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(m.order_count()),
                                    std::vector<int>(static_cast<std::size_t>(m.n)));
  for (int j = 0; j < m.order_count(); ++j)
    for (int p = 0; p < m.n; ++p)
      pos[static_cast<std::size_t>(j)][static_cast<std::size_t>(
          m.orders[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)])] = p;

  out.intervals.assign(static_cast<std::size_t>(m.n), {});
  for (int x = 0; x < m.n; ++x) {
    auto& row = out.intervals[static_cast<std::size_t>(x)];
    row.reserve(static_cast<std::size_t>(2 * m.order_count()));
    for (int j = 0; j < m.order_count(); ++j) {
      const Interval iv = m.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
      const int px = pos[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
      if (iv.lo <= px && px < iv.hi) {
        row.push_back({iv.lo, px});
        row.push_back({px + 1, iv.hi});
      } else {
        row.push_back(iv);
        row.push_back({iv.hi, iv.hi});
      }
    }
  }
  out.anchors.assign(static_cast<std::size_t>(m.n), std::nullopt);
  return out;
}

/// Open model -> closed model by appending one identity order in which every
/// vertex covers just itself.
inline LineModel open_to_closed(const LineModel& m) {
  if (m.flavor != Flavor::Open) throw std::invalid_argument("input model must be open-flavor");
  detail::require_structure(m);
  LineModel out = m;
  out.flavor = Flavor::Closed;
  std::vector<int> identity(static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.n; ++i) identity[static_cast<std::size_t>(i)] = i;
  out.orders.push_back(std::move(identity));
  for (int x = 0; x < m.n; ++x)
    out.intervals[static_cast<std::size_t>(x)].push_back({x, x + 1});
  out.anchors.assign(static_cast<std::size_t>(m.n), std::nullopt);
  return out;
}

/// Restriction to an induced vertex subset (relabelled ascending). Surviving
/// vertices keep their relative positions; intervals shrink by counting the
/// survivors strictly before each endpoint. Anchors survive because a
/// position-n endpoint maps to the new n.
inline LineModel restrict_model(const LineModel& m, std::vector<int> s) {
  detail::require_structure(m);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw std::invalid_argument("restriction to empty vertex set");
  for (int v : s)
    if (v < 0 || v >= m.n) throw std::out_of_range("vertex id out of range");

  std::vector<int> local(static_cast<std::size_t>(m.n), -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<int>(i);

  LineModel out;
  out.flavor = m.flavor;
  out.n = static_cast<int>(s.size());
  out.orders.reserve(m.orders.size());
  out.intervals.assign(static_cast<std::size_t>(out.n),
                       std::vector<Interval>(m.orders.size()));
  out.anchors.assign(static_cast<std::size_t>(out.n), std::nullopt);
  for (std::size_t i = 0; i < s.size(); ++i)
    out.anchors[i] = m.anchors[static_cast<std::size_t>(s[i])];

  for (int j = 0; j < m.order_count(); ++j) {
    const auto& ord = m.orders[static_cast<std::size_t>(j)];
    // survivors[p] = how many kept vertices sit at positions < p
    std::vector<int> survivors(static_cast<std::size_t>(m.n) + 1, 0);
    std::vector<int> new_order;
    new_order.reserve(s.size());
    for (int p = 0; p < m.n; ++p) {
      survivors[static_cast<std::size_t>(p) + 1] =
          survivors[static_cast<std::size_t>(p)] +
          (local[static_cast<std::size_t>(ord[static_cast<std::size_t>(p)])] >= 0 ? 1 : 0);
      if (int lx = local[static_cast<std::size_t>(ord[static_cast<std::size_t>(p)])]; lx >= 0)
        new_order.push_back(lx);
    }
    out.orders.push_back(std::move(new_order));
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Interval iv = m.intervals[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(j)];
      out.intervals[i][static_cast<std::size_t>(j)] = {survivors[static_cast<std::size_t>(iv.lo)],
                                                       survivors[static_cast<std::size_t>(iv.hi)]};
    }
  }
  return out;
}

/// Pads a model with extra no-op orders (identity order, empty interval at
/// position n for every vertex) up to `target` orders. Anchors are kept.
inline LineModel pad_orders(const LineModel& m, int target) {
  detail::require_structure(m);
  if (target < m.order_count())
    throw std::invalid_argument("pad target below current order count");
  LineModel out = m;
  std::vector<int> identity(static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.n; ++i) identity[static_cast<std::size_t>(i)] = i;
  for (int j = m.order_count(); j < target; ++j) {
    out.orders.push_back(identity);
    for (int x = 0; x < m.n; ++x)
      out.intervals[static_cast<std::size_t>(x)].push_back({m.n, m.n});
  }
  return out;
}

/// Model of the disjoint union: blocks are laid out one after another in
/// every order, block i keeping its own intervals (shifted). Inputs are
/// padded to the widest order count. Anchors are dropped: an anchored
/// interval would have to span the later blocks too.
inline LineModel concat_disjoint_union(const std::vector<LineModel>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint union of nothing");
  const Flavor flavor = parts.front().flavor;
  int p = 0;
  long long total = 0;
  for (const auto& m : parts) {
    detail::require_structure(m);
    if (m.flavor != flavor) throw std::invalid_argument("mixed model flavors");
    p = std::max(p, m.order_count());
    total += m.n;
  }
  if (total > 1000000000LL) throw std::invalid_argument("disjoint union too large");

  LineModel out;
  out.flavor = flavor;
  out.n = static_cast<int>(total);
  out.orders.assign(static_cast<std::size_t>(p), {});
  for (auto& ord : out.orders) ord.reserve(static_cast<std::size_t>(out.n));
  out.intervals.assign(static_cast<std::size_t>(out.n), std::vector<Interval>(static_cast<std::size_t>(p)));
  out.anchors.assign(static_cast<std::size_t>(out.n), std::nullopt);

  int offset = 0;
  for (const auto& part : parts) {
    const LineModel padded = part.order_count() == p ? part : pad_orders(part, p);
    for (int j = 0; j < p; ++j) {
      // Block start inside this order equals the vertex offset because every
      // earlier block contributes all of its vertices to every order.
      for (int v : padded.orders[static_cast<std::size_t>(j)])
        out.orders[static_cast<std::size_t>(j)].push_back(v + offset);
      for (int x = 0; x < padded.n; ++x) {
        const Interval iv = padded.intervals[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
        out.intervals[static_cast<std::size_t>(x + offset)][static_cast<std::size_t>(j)] = {
            iv.lo + offset, iv.hi + offset};
      }
    }
    offset += padded.n;
  }
  return out;
}

enum class EncodingKind { Contiguity, Linearity };

/// Integer footprint of an encoding: a k-interval contiguity encoding stores
/// (2k+1) integers per vertex, a k-order line encoding stores 3k per vertex.
inline long long encoding_size_integers(EncodingKind kind, long long n, long long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("size formula needs n, k >= 1");
  return kind == EncodingKind::Contiguity ? (2 * k + 1) * n : 3 * k * n;
}

}  // namespace linco

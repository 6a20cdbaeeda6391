// Acceptance gate: checks the binding guarantees of the library end to end
// and prints exactly one [PASS]/[FAIL] line per criterion. Returns the number
// of failed criteria. No test framework on purpose: every check is spelled
// out with the plain library API plus the real CLI entry point.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linco/cli.hpp"
#include "linco/cotree.hpp"
#include "linco/encoder.hpp"
#include "linco/experiment.hpp"
#include "linco/generators.hpp"
#include "linco/minor_oracle.hpp"
#include "linco/model_io.hpp"
#include "linco/models.hpp"
#include "linco/oracle.hpp"
#include "linco/rank.hpp"
#include "support/enumerate.hpp"

using namespace linco;
namespace ts = linco::testsupport;

namespace {

int failures = 0;
std::vector<std::string> notes;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int id, const std::string& label, bool ok, double secs) {
  std::printf("[%s] criterion %2d (%6.2fs): %s\n", ok ? "PASS" : "FAIL", id, secs, label.c_str());
  for (const auto& n : notes) std::printf("         %s\n", n.c_str());
  notes.clear();
  if (!ok) ++failures;
}

void note(const std::string& text) {
  if (notes.size() < 8) notes.push_back(text);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

/// Corpus shared by criteria 1 and 2: every canonical cotree with <= 8
/// leaves plus 500 seeded random cotrees with <= 60 leaves.
std::vector<Cotree> soundness_corpus() {
  std::vector<Cotree> corpus = ts::all_canonical_cotrees_up_to(8);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = 2 + static_cast<int>((seed * 2654435761u) % 59);  // 2..60 leaves
    corpus.push_back(gen_random_cotree(n, seed));
  }
  return corpus;
}

struct EncodedStats {
  int n = 0;
  int rank = 0;
  bool minimal = false;
  int p = 0;
};

std::vector<EncodedStats> corpus_stats;  // filled by criterion 1, reused by 2

bool criterion1() {
  const auto corpus = soundness_corpus();
  corpus_stats.clear();
  corpus_stats.reserve(corpus.size());
  const std::string tree_path = "acc_tmp_tree.txt";
  const std::string model_path = "acc_tmp_model.txt";
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& t : corpus) {
    const RankAnnotation ann = factorial_rank(t);
    const LineModel m = encode(t, ann);
    corpus_stats.push_back(
        {t.leaf_count(), ann.root_rank, is_minimally_of_rank(ann, t.root()), m.order_count()});

    write_file(tree_path, format_cotree(t) + "\n");
    write_file(model_path, format_line_model(m));
    std::ostringstream out, err;
    const int code = cli::run({"verify", tree_path, model_path}, out, err);
    if (code != 0 || out.str() != "ok\n") {
      ok = false;
      note("verify exit " + std::to_string(code) + " for " + format_cotree(t));
    }
    ++checked;
  }
  std::remove(tree_path.c_str());
  std::remove(model_path.c_str());
  note(std::to_string(checked) + " cotrees verified through the CLI (809 exhaustive + 500 random)");
  return ok && checked == 809 + 500;
}

bool criterion2() {
  if (corpus_stats.size() != 809 + 500) return false;
  bool ok = true;
  for (const auto& st : corpus_stats) {
    if (st.p > 2 * st.rank + 3) ok = false;
    if (st.rank >= 1 && st.minimal && st.p > 2 * st.rank + 2) ok = false;
    if (st.rank == 0 && st.p != 1) ok = false;
  }
  note("order counts vs 2*rank+3 / 2*rank+2 (minimal) / 1 (rank 0), zero tolerance");
  return ok;
}

bool criterion3() {
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& t : ts::all_rooted_trees_up_to(9)) {
    const int dp = factorial_rank(t).root_rank;
    const int oracle = minor_oracle_rank(t);
    if (dp != oracle) {
      ok = false;
      note("rank mismatch: dp=" + std::to_string(dp) + " oracle=" + std::to_string(oracle));
    }
    ++checked;
  }
  note(std::to_string(checked) + " rooted tree shapes compared");
  return ok && checked == 486;
}

bool criterion4() {
  bool ok = true;
  const int expected_leaves[] = {1, 3, 15, 105};
  for (int h = 0; h <= 3; ++h)
    ok = ok && gen_double_factorial(h, NodeLabel::Series).leaf_count() == expected_leaves[h];
  for (int h = 0; h <= 5; ++h)
    ok = ok && factorial_rank(double_factorial_shape(h)).root_rank == h;
  note("leaf counts 1,3,15,105 and rank h for h <= 5");
  return ok;
}

bool criterion5() {
  bool ok = true;
  for (int l = 1; l <= 10; ++l) {
    const LineModel m = pair_series_model(l);
    if (m.order_count() != 2) ok = false;
    Graph g(2 * l);
    for (int u = 0; u < 2 * l; ++u)
      for (int v = u + 1; v < 2 * l; ++v)
        if (v != (u ^ 1)) g.add_edge(u, v);
    if (!verify_line_model(g, m).ok) {
      ok = false;
      note("pair-series model invalid at l=" + std::to_string(l));
    }
  }
  const LineModel two = pair_series_model(2);
  const std::vector<std::vector<Interval>> frozen = {
      {{0, 1}, {2, 4}}, {{1, 4}, {2, 2}}, {{0, 3}, {4, 4}}, {{3, 4}, {0, 2}}};
  const std::vector<int> identity{0, 1, 2, 3};
  if (two.intervals != frozen || two.orders != std::vector<std::vector<int>>{identity, identity} ||
      two.anchors != std::vector<std::optional<int>>{1, 0, 1, 0}) {
    ok = false;
    note("l=2 coordinates differ from the frozen reference");
  }
  note("widths 1..10 verified, l=2 byte-identical");
  return ok;
}

bool criterion6() {
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);  // 2..10
    const Cotree t = gen_random_cotree(n, seed * 7919);
    const Graph g = cotree_to_graph(t);
    const LineModel closed = encode(t);
    const LineModel open = closed_to_open(closed);
    if (open.order_count() != 2 * closed.order_count() || !verify_line_model(g, open).ok) {
      ok = false;
      note("closed->open failed at seed " + std::to_string(seed));
    }
    const LineModel back = open_to_closed(open);
    if (back.order_count() != open.order_count() + 1 || !verify_line_model(g, back).ok) {
      ok = false;
      note("open->closed failed at seed " + std::to_string(seed));
    }
  }
  note("50 random cographs n <= 10, both conversions verified");
  return ok;
}

bool criterion7() {
  bool ok = true;
  const Graph c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n");
  const Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  const Graph k13 = parse_edge_list("4 3\n0 1\n0 2\n0 3\n");
  const Graph k2 = parse_edge_list("2 1\n0 1\n");

  auto lin = [](const Graph& g) { return bruteforce_linearity(g, 3, true).value; };
  auto cont = [](const Graph& g) { return bruteforce_contiguity(g).value; };
  if (lin(c4) != 2) ok = false;
  if (cont(c4) != 2) ok = false;
  if (lin(p4) != 1) ok = false;
  if (cont(k13) != 2) ok = false;
  if (lin(k2) != 1) ok = false;
  if (!ok) note("a frozen regression value is off");

  std::size_t compared = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : ts::graphs_up_to_iso(n)) {
      const auto lv = bruteforce_linearity(g, 3, true).value;
      const auto cv = bruteforce_contiguity(g).value;
      if (!lv || !cv) continue;  // linearity above the search cap
      ++compared;
      if (*lv > *cv) {
        ok = false;
        note("lin > cont on n=" + std::to_string(n));
      }
    }
  note("regressions plus lin <= cont on " + std::to_string(compared) + " graphs with n <= 6");
  return ok;
}

bool criterion8() {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& t : ts::all_canonical_cotrees_up_to(6)) {
    const Graph g = cotree_to_graph(t);
    const LineModel m = encode(t);
    const auto lv = bruteforce_linearity(g, 3, true).value;
    if (!lv) {
      ok = false;
      note("oracle returned nothing for " + format_cotree(t));
      continue;
    }
    if (*lv > m.order_count()) {
      ok = false;
      note("oracle beat the encoder upper bound on " + format_cotree(t));
    }
    ++checked;
  }
  note("oracle linearity <= encoder order count on " + std::to_string(checked) + " cographs");
  return ok && checked == 107;
}

bool criterion9() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = experiment_ratio(16, 0);
  const double table_secs = seconds_since(start);
  bool ok = table_secs < 60.0;
  if (!ok) note("table took too long");
  if (rows.size() != 16) ok = false;
  for (const auto& row : rows) {
    if (row.p_encoder > 2 * row.rank + 3) {
      ok = false;
      note("order bound violated at h=" + std::to_string(row.h));
    }
  }
  if (!rows.empty() && rows.back().n != 65536) ok = false;

  // 1,000 sampled queries at the largest height, checked against the
  // tree-walk neighbourhood (the graph itself is never materialized).
  const Cotree t = gen_binary_cotree(16, NodeLabel::Series);
  const LineModel m = encode(t);
  const auto leaf_map = leaf_of_vertex(t);
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    const int x = static_cast<int>(rng() % static_cast<std::uint64_t>(m.n));
    if (query_closed_neighborhood(m, x) != cotree_closed_neighborhood(t, leaf_map, x)) {
      ok = false;
      note("query mismatch at vertex " + std::to_string(x));
      break;
    }
  }
  std::ostringstream msg;
  msg << "h <= 16 table in " << std::fixed << std::setprecision(2) << table_secs
      << "s, 1000 queries at n=65536 exact";
  note(msg.str());
  return ok;
}

bool criterion10() {
  bool ok = true;
  for (long long n : {1LL, 4LL, 97LL, 65536LL})
    for (long long k : {1LL, 2LL, 5LL, 13LL}) {
      if (encoding_size_integers(EncodingKind::Contiguity, n, k) != (2 * k + 1) * n) ok = false;
      if (encoding_size_integers(EncodingKind::Linearity, n, k) != 3 * k * n) ok = false;
    }

  // The stats line of `encode` must report size_integers = 3 * p * n.
  const std::string tree_path = "acc_tmp_stats_tree.txt";
  write_file(tree_path, "P(S(P(0,1),P(2,3),P(4,5)),6)\n");
  std::ostringstream out, err;
  if (cli::run({"encode", tree_path}, out, err) != 0) ok = false;
  std::remove(tree_path.c_str());
  const std::string text = out.str();
  const auto stats_pos = text.find("n=7 ");
  long long n = 0, p = 0, size = 0;
  if (stats_pos == std::string::npos ||
      std::sscanf(text.c_str() + stats_pos, "n=%lld rank=%*d minimal=%*s p=%lld bound=%*d size_integers=%lld",
                  &n, &p, &size) != 3 ||
      size != 3 * p * n) {
    ok = false;
    note("stats line does not report 3*p*n");
  }
  note("(2k+1)n and 3kn formulas exact; CLI stats line reports 3pn");
  return ok;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    bool (*fn)();
  };
  const Entry entries[] = {
      {1, "encoder soundness on 809 exhaustive + 500 random cotrees (via CLI verify)", criterion1},
      {2, "order-count bounds with zero tolerance", criterion2},
      {3, "rank DP equals the contraction-minor oracle on all 486 trees with <= 9 nodes", criterion3},
      {4, "double factorial leaf counts and ranks", criterion4},
      {5, "two-order pair-series models, frozen l=2 coordinates", criterion5},
      {6, "closed/open conversions on 50 random cographs", criterion6},
      {7, "oracle regressions and lin <= cont for n <= 6", criterion7},
      {8, "oracle linearity never beats the encoder on cographs with n <= 6", criterion8},
      {9, "height-16 table under 60s with exact sampled queries", criterion9},
      {10, "size accounting formulas and stats line", criterion10},
  };
  for (const Entry& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = e.fn();
    } catch (const std::exception& ex) {
      note(std::string("exception: ") + ex.what());
    }
    report(e.id, e.label, ok, seconds_since(start));
  }
  if (failures == 0)
    std::printf("all 10 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}

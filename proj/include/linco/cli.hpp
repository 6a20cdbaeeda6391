#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linco/cotree.hpp"
#include "linco/encoder.hpp"
#include "linco/experiment.hpp"
#include "linco/generators.hpp"
#include "linco/graph.hpp"
#include "linco/minor_oracle.hpp"
#include "linco/model_io.hpp"
#include "linco/models.hpp"
#include "linco/oracle.hpp"
#include "linco/rank.hpp"
#include "linco/recognition.hpp"

namespace linco::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open file for writing: " + path);
  f << text;
}

enum class InputKind { EdgeList, CotreeText };

inline InputKind sniff_input(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (linco::detail::blank_or_comment(line)) continue;
    const auto first = line.find_first_not_of(" \t\r");
    const char c = line[first];
    if (c == 'S' || c == 'P') return InputKind::CotreeText;
    if (c >= '0' && c <= '9') {
      std::vector<long long> nums;
      if (linco::detail::parse_ints(line, nums) && nums.size() == 2) return InputKind::EdgeList;
      return InputKind::CotreeText;
    }
    throw parse_error("unrecognized input format");
  }
  throw parse_error("empty input");
}

struct Loaded {
  Graph graph;
  std::optional<Cotree> tree;
};

// Accepts either an edge list or a cotree. A cotree is materialized into its
// graph, which is quadratic, hence the size guard.
inline Loaded load_graph_input(const std::string& path, bool force) {
  const std::string text = read_file(path);
  if (sniff_input(text) == InputKind::EdgeList) return {parse_edge_list(text), std::nullopt};
  Cotree t = parse_cotree(text);
  const int n = t.leaf_count();
  if (n > 4096 && !force)
    throw guard_error("materializing the graph of a cotree with n=" + std::to_string(n) +
                      " leaves (limit 4096); pass --force to do it anyway");
  Graph g = cotree_to_graph(t);
  return {std::move(g), std::move(t)};
}

inline std::string bool_word(bool b) { return b ? "true" : "false"; }

inline std::string violation_report(const VerificationReport& rep) {
  std::ostringstream out;
  out << "invalid: " << rep.violations.size() << " violation(s)\n";
  std::size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == 50) {
      out << "...\n";
      break;
    }
    out << "vertex " << v.vertex << ":";
    if (!v.missing.empty()) {
      out << " missing {";
      for (std::size_t i = 0; i < v.missing.size(); ++i) out << (i ? " " : "") << v.missing[i];
      out << "}";
    }
    if (!v.extra.empty()) {
      out << " extra {";
      for (std::size_t i = 0; i < v.extra.size(); ++i) out << (i ? " " : "") << v.extra[i];
      out << "}";
    }
    if (v.bad_anchor) out << " anchored interval does not reach position n";
    out << '\n';
  }
  return out.str();
}

}  // namespace detail

/// Entry point used by both the binary and the tests. `args` excludes the
/// program name. Exit codes: 0 success, 1 verification failure, 2 usage or
/// input error, 3 guard refusal.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"interval encodings of cographs over vertex orders"};
  app.require_subcommand(1);
  // Long-form help only: the default -h short flag would shadow --h (height).
  app.set_help_flag("--help", "print help");

  auto* gen = app.add_subcommand("gen", "generate a cotree");
  gen->set_help_flag("--help", "print help");
  std::string gen_family;
  int gen_h = -1, gen_n = -1;
  std::string gen_root = "S", gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family, "binary | dfact | random")
      ->required()
      ->check(CLI::IsMember({"binary", "dfact", "random"}));
  gen->add_option("--h", gen_h, "height (binary, dfact)");
  gen->add_option("--n", gen_n, "leaf count (random)");
  gen->add_option("--root", gen_root, "root label")->check(CLI::IsMember({"S", "P"}));
  gen->add_option("--seed", gen_seed, "seed (random)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto* rank_cmd = app.add_subcommand("rank", "factorial rank of every cotree node");
  std::string rank_in, rank_out;
  rank_cmd->add_option("file", rank_in, "cotree file")->required();
  rank_cmd->add_option("--out", rank_out, "output file (default stdout)");

  auto* encode_cmd = app.add_subcommand("encode", "encode a cotree as a line model");
  std::string encode_in, encode_out;
  encode_cmd->add_option("file", encode_in, "cotree file")->required();
  encode_cmd->add_option("--out", encode_out, "model file (default stdout, before the stats line)");

  auto* verify_cmd = app.add_subcommand("verify", "check a line model against a graph or cotree");
  std::string verify_in, verify_model;
  bool verify_force = false;
  verify_cmd->add_option("input", verify_in, "edge list or cotree file")->required();
  verify_cmd->add_option("model", verify_model, "LINMODEL file")->required();
  verify_cmd->add_flag("--force", verify_force, "lift the materialization guard");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force linearity / contiguity");
  std::string oracle_param, oracle_in, oracle_witness;
  int oracle_pmax = 3;
  bool oracle_open = false, oracle_force = false;
  oracle_cmd->add_option("--param", oracle_param, "lin | cont")
      ->required()
      ->check(CLI::IsMember({"lin", "cont"}));
  oracle_cmd->add_option("input", oracle_in, "edge list or cotree file")->required();
  oracle_cmd->add_option("--pmax", oracle_pmax, "largest order count to try (lin)");
  oracle_cmd->add_flag("--open", oracle_open, "use open neighbourhoods");
  oracle_cmd->add_flag("--force", oracle_force, "lift the size guard (lin only)");
  oracle_cmd->add_option("--witness", oracle_witness, "write the witness model here");

  auto* query_cmd = app.add_subcommand("query", "closed neighbourhood from a model");
  std::string query_model;
  int query_vertex = -1;
  query_cmd->add_option("model", query_model, "LINMODEL file")->required();
  query_cmd->add_option("--vertex", query_vertex, "vertex id")->required();

  auto* bench_cmd = app.add_subcommand("bench", "compare model queries against adjacency");
  std::string bench_in, bench_model;
  int bench_count = 1000;
  std::uint64_t bench_seed = 0;
  bool bench_force = false;
  bench_cmd->add_option("input", bench_in, "edge list or cotree file")->required();
  bench_cmd->add_option("model", bench_model, "LINMODEL file")->required();
  bench_cmd->add_option("--count", bench_count, "number of queries");
  bench_cmd->add_option("--seed", bench_seed, "seed");
  bench_cmd->add_flag("--force", bench_force, "lift the materialization guard");

  auto* exp_cmd = app.add_subcommand("experiment", "size table for the binary family");
  int exp_hmax = 0;
  std::uint64_t exp_seed = 0;
  exp_cmd->add_option("--hmax", exp_hmax, "largest height")->required();
  exp_cmd->add_option("--seed", exp_seed, "sampling seed");

  try {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("linco");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      Cotree t;
      const NodeLabel root = gen_root == "S" ? NodeLabel::Series : NodeLabel::Parallel;
      if (gen_family == "binary") {
        if (gen_h < 0) throw std::invalid_argument("gen --family binary needs --h >= 0");
        if (gen_h > 20) throw guard_error("gen guard: binary height limit is 20");
        t = gen_binary_cotree(gen_h, root);
      } else if (gen_family == "dfact") {
        if (gen_h < 0) throw std::invalid_argument("gen --family dfact needs --h >= 0");
        if (gen_h > 6) throw guard_error("gen guard: dfact height limit is 6");
        t = gen_double_factorial(gen_h, root);
      } else {
        if (gen_n < 1) throw std::invalid_argument("gen --family random needs --n >= 1");
        if (gen_n > 1000000) throw guard_error("gen guard: random leaf limit is 1000000");
        t = gen_random_cotree(gen_n, gen_seed);
      }
      detail::write_output(gen_out, format_cotree(t) + "\n", out);
      return 0;
    }

    if (rank_cmd->parsed()) {
      const Cotree t = canonicalize(parse_cotree(detail::read_file(rank_in)));
      const RankAnnotation ann = factorial_rank(t);
      const std::vector<int> depth = node_depths(tree_of_cotree(t));
      std::ostringstream table;
      for (int id = 0; id < t.node_count(); ++id)
        table << id << ' ' << depth[static_cast<std::size_t>(id)] << ' '
              << ann.rank[static_cast<std::size_t>(id)] << ' '
              << (ann.minimal[static_cast<std::size_t>(id)] ? 1 : 0) << '\n';
      detail::write_output(rank_out, table.str(), out);
      return 0;
    }

    if (encode_cmd->parsed()) {
      const Cotree t = canonicalize(parse_cotree(detail::read_file(encode_in)));
      const RankAnnotation ann = factorial_rank(t);
      const LineModel m = encode(t, ann);
      detail::write_output(encode_out, format_line_model(m), out);
      const int root = t.root();
      out << "n=" << m.n << " rank=" << ann.root_rank << " minimal="
          << detail::bool_word(is_minimally_of_rank(ann, root)) << " p=" << m.order_count()
          << " bound=" << encoder_order_bound(ann, root) << " size_integers="
          << encoding_size_integers(EncodingKind::Linearity, m.n, m.order_count()) << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      const detail::Loaded in = detail::load_graph_input(verify_in, verify_force);
      const LineModel m = parse_line_model(detail::read_file(verify_model));
      const VerificationReport rep = verify_line_model(in.graph, m);
      if (rep.ok) {
        out << "ok\n";
        return 0;
      }
      out << detail::violation_report(rep);
      return 1;
    }

    if (oracle_cmd->parsed()) {
      const detail::Loaded in = detail::load_graph_input(oracle_in, oracle_force);
      const bool closed = !oracle_open;
      if (oracle_param == "lin") {
        const LinearityResult res =
            bruteforce_linearity(in.graph, oracle_pmax, closed, oracle_force);
        if (res.value) {
          out << *res.value << '\n';
          if (!oracle_witness.empty() && res.witness)
            detail::write_output(oracle_witness, format_line_model(*res.witness), out);
        } else {
          out << "-\n";
        }
      } else {
        const ContiguityResult res = bruteforce_contiguity(in.graph, closed);
        out << *res.value << '\n';
        if (!oracle_witness.empty() && res.witness)
          detail::write_output(oracle_witness, format_contiguity_model(*res.witness), out);
      }
      return 0;
    }

    if (query_cmd->parsed()) {
      const LineModel m = parse_line_model(detail::read_file(query_model));
      const std::vector<int> nb = query_closed_neighborhood(m, query_vertex);
      for (std::size_t i = 0; i < nb.size(); ++i) out << (i ? " " : "") << nb[i];
      out << '\n';
      return 0;
    }

    if (bench_cmd->parsed()) {
      const detail::Loaded in = detail::load_graph_input(bench_in, bench_force);
      const LineModel m = parse_line_model(detail::read_file(bench_model));
      const BenchReport rep = bench_queries(m, in.graph, bench_count, bench_seed);
      std::ostringstream line;
      line << "queries=" << rep.count << " mismatches=" << rep.mismatched.size() << std::fixed
           << std::setprecision(1) << " model_ns_per_query=" << rep.model_ns_per_query
           << " adj_ns_per_query=" << rep.adj_ns_per_query << '\n';
      out << line.str();
      if (!rep.ok()) {
        out << "first mismatched vertices:";
        for (std::size_t i = 0; i < rep.mismatched.size() && i < 10; ++i)
          out << ' ' << rep.mismatched[i];
        out << '\n';
        return 1;
      }
      return 0;
    }

    if (exp_cmd->parsed()) {
      out << format_experiment_table(experiment_ratio(exp_hmax, exp_seed));
      return 0;
    }
  } catch (const guard_error& e) {
    err << "guard: " << e.what() << '\n';
    return 3;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace linco::cli

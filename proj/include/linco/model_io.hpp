#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "linco/models.hpp"

namespace linco {

namespace detail {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (blank_or_comment(line)) continue;
      out = line;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at line " + std::to_string(line_no));
  }

  std::string need(const std::string& what) {
    std::string out;
    if (!next(out)) throw parse_error("unexpected end of input: expected " + what);
    return out;
  }
};

inline bool parse_interval_token(const std::string& tok, Interval& iv) {
  auto colon = tok.find(':');
  if (colon == std::string::npos) return false;
  std::vector<long long> nums;
  if (!parse_ints(tok.substr(0, colon) + " " + tok.substr(colon + 1), nums) || nums.size() != 2)
    return false;
  iv.lo = static_cast<int>(nums[0]);
  iv.hi = static_cast<int>(nums[1]);
  return true;
}

}  // namespace detail

inline std::string format_line_model(const LineModel& m) {
  std::ostringstream out;
  out << "LINMODEL " << (m.flavor == Flavor::Closed ? "closed" : "open") << ' ' << m.order_count()
      << ' ' << m.n << '\n';
  for (const auto& ord : m.orders) {
    for (std::size_t i = 0; i < ord.size(); ++i) out << (i ? " " : "") << ord[i];
    out << '\n';
  }
  for (int x = 0; x < m.n; ++x) {
    out << x;
    for (const Interval& iv : m.intervals[static_cast<std::size_t>(x)])
      out << ' ' << iv.lo << ':' << iv.hi;
    out << '\n';
  }
  bool any_anchor = false;
  for (const auto& a : m.anchors) any_anchor = any_anchor || a.has_value();
  if (any_anchor) {
    out << "ANCHORS\n";
    for (int x = 0; x < m.n; ++x) {
      if (x) out << ' ';
      if (auto a = m.anchors[static_cast<std::size_t>(x)])
        out << *a;
      else
        out << '-';
    }
    out << '\n';
  }
  return out.str();
}

inline LineModel parse_line_model(std::istream& in) {
  detail::LineReader rd{in};
  std::string line = rd.need("LINMODEL header");
  std::istringstream head(line);
  std::string magic, flavor_word;
  long long p = 0, n = 0;
  if (!(head >> magic >> flavor_word >> p >> n) || magic != "LINMODEL")
    rd.fail("malformed LINMODEL header");
  std::string rest;
  if (head >> rest) rd.fail("trailing tokens in LINMODEL header");
  if (flavor_word != "closed" && flavor_word != "open") rd.fail("unknown model flavor");
  if (p < 1 || n < 1 || n > 10000000 || p > 10000) rd.fail("implausible LINMODEL dimensions");

  LineModel m;
  m.flavor = flavor_word == "closed" ? Flavor::Closed : Flavor::Open;
  m.n = static_cast<int>(n);
  m.orders.reserve(static_cast<std::size_t>(p));
  std::vector<long long> nums;
  for (long long j = 0; j < p; ++j) {
    line = rd.need("order line");
    if (!detail::parse_ints(line, nums) || nums.size() != static_cast<std::size_t>(n))
      rd.fail("malformed order line");
    std::vector<int> ord(nums.begin(), nums.end());
    m.orders.push_back(std::move(ord));
  }
  m.intervals.assign(static_cast<std::size_t>(n), {});
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long long row = 0; row < n; ++row) {
    line = rd.need("interval line");
    std::istringstream ss(line);
    long long x = -1;
    if (!(ss >> x) || x < 0 || x >= n) rd.fail("malformed interval line");
    if (seen[static_cast<std::size_t>(x)]) rd.fail("duplicate vertex row");
    seen[static_cast<std::size_t>(x)] = 1;
    std::string tok;
    auto& dst = m.intervals[static_cast<std::size_t>(x)];
    while (ss >> tok) {
      Interval iv;
      if (!detail::parse_interval_token(tok, iv)) rd.fail("malformed interval token");
      dst.push_back(iv);
    }
    if (dst.size() != static_cast<std::size_t>(p)) rd.fail("wrong interval count");
  }
  m.anchors.assign(static_cast<std::size_t>(n), std::nullopt);
  if (rd.next(line)) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word != "ANCHORS") rd.fail("unexpected content after intervals");
    if (ss >> word) rd.fail("trailing tokens after ANCHORS");
    line = rd.need("anchor tokens");
    std::istringstream toks(line);
    for (long long x = 0; x < n; ++x) {
      std::string tok;
      if (!(toks >> tok)) rd.fail("missing anchor token");
      if (tok == "-") continue;
      std::vector<long long> one;
      if (!detail::parse_ints(tok, one) || one.size() != 1 || one[0] < 0 || one[0] >= p)
        rd.fail("malformed anchor token");
      m.anchors[static_cast<std::size_t>(x)] = static_cast<int>(one[0]);
    }
    std::string tok;
    if (toks >> tok) rd.fail("trailing anchor tokens");
    if (rd.next(line)) rd.fail("unexpected content after anchors");
  }
  detail::require_structure(m);  // throws invalid_argument on semantic nonsense
  return m;
}

inline LineModel parse_line_model(const std::string& text) {
  std::istringstream ss(text);
  return parse_line_model(ss);
}

inline std::string format_contiguity_model(const ContiguityModel& m) {
  std::ostringstream out;
  out << "CONTMODEL " << m.n << '\n';
  for (std::size_t i = 0; i < m.order.size(); ++i) out << (i ? " " : "") << m.order[i];
  out << '\n';
  for (int x = 0; x < m.n; ++x) {
    out << x;
    for (const Interval& iv : m.intervals[static_cast<std::size_t>(x)])
      out << ' ' << iv.lo << ':' << iv.hi;
    out << '\n';
  }
  return out.str();
}

inline ContiguityModel parse_contiguity_model(std::istream& in) {
  detail::LineReader rd{in};
  std::string line = rd.need("CONTMODEL header");
  std::istringstream head(line);
  std::string magic;
  long long n = 0;
  if (!(head >> magic >> n) || magic != "CONTMODEL") rd.fail("malformed CONTMODEL header");
  std::string rest;
  if (head >> rest) rd.fail("trailing tokens in CONTMODEL header");
  if (n < 1 || n > 10000000) rd.fail("implausible CONTMODEL dimensions");

  ContiguityModel m;
  m.n = static_cast<int>(n);
  std::vector<long long> nums;
  line = rd.need("order line");
  if (!detail::parse_ints(line, nums) || nums.size() != static_cast<std::size_t>(n))
    rd.fail("malformed order line");
  m.order.assign(nums.begin(), nums.end());
  m.intervals.assign(static_cast<std::size_t>(n), {});
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long long row = 0; row < n; ++row) {
    line = rd.need("interval line");
    std::istringstream ss(line);
    long long x = -1;
    if (!(ss >> x) || x < 0 || x >= n) rd.fail("malformed interval line");
    if (seen[static_cast<std::size_t>(x)]) rd.fail("duplicate vertex row");
    seen[static_cast<std::size_t>(x)] = 1;
    std::string tok;
    while (ss >> tok) {
      Interval iv;
      if (!detail::parse_interval_token(tok, iv)) rd.fail("malformed interval token");
      m.intervals[static_cast<std::size_t>(x)].push_back(iv);
    }
  }
  if (rd.next(line)) rd.fail("unexpected content after intervals");
  detail::require_structure(m);
  return m;
}

inline ContiguityModel parse_contiguity_model(const std::string& text) {
  std::istringstream ss(text);
  return parse_contiguity_model(ss);
}

}  // namespace linco

#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "linco/cotree.hpp"
#include "linco/graph.hpp"

namespace linco {

/// Certificate that the input is not a cograph: an induced path a-b-c-d.
struct P4Witness {
  std::array<int, 4> path;
};

namespace detail {

struct Recognizer {
  const Graph& g;
  Cotree tree{};
  std::optional<P4Witness> witness{};

  bool adj(int u, int v, bool in_complement) const {
    return in_complement ? !g.adjacent(u, v) : g.adjacent(u, v);
  }

  // Connected components of g (or its complement) restricted to `verts`,
  // each sorted, listed in order of their smallest vertex.
  std::vector<std::vector<int>> components(const std::vector<int>& verts, bool in_complement) const {
    std::vector<char> seen(verts.size(), 0);
    std::vector<std::vector<int>> comps;
    for (std::size_t s = 0; s < verts.size(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> stack{s};
      seen[s] = 1;
      std::vector<int> comp;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        comp.push_back(verts[i]);
        for (std::size_t j = 0; j < verts.size(); ++j)
          if (!seen[j] && adj(verts[i], verts[j], in_complement)) {
            seen[j] = 1;
            stack.push_back(j);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  P4Witness find_p4(const std::vector<int>& verts) const {
    const std::size_t n = verts.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            std::array<int, 4> q{verts[a], verts[b], verts[c], verts[d]};
            std::array<int, 4> perm = q;
            std::sort(perm.begin(), perm.end());
            do {
              if (perm[0] > perm[3]) continue;  // path reversals are the same witness
              if (g.adjacent(perm[0], perm[1]) && g.adjacent(perm[1], perm[2]) &&
                  g.adjacent(perm[2], perm[3]) && !g.adjacent(perm[0], perm[2]) &&
                  !g.adjacent(perm[0], perm[3]) && !g.adjacent(perm[1], perm[3]))
                return P4Witness{perm};
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
    throw std::logic_error("recognition failed but no induced P4 exists");
  }

  // Returns arena node id, or -1 once a witness has been recorded.
  int build(const std::vector<int>& verts) {
    if (verts.size() == 1) return tree.add_leaf(verts[0]);
    auto comps = components(verts, false);
    NodeLabel label = NodeLabel::Parallel;
    if (comps.size() == 1) {
      comps = components(verts, true);
      label = NodeLabel::Series;
      if (comps.size() == 1) {
        witness = find_p4(verts);
        return -1;
      }
    }
    int id = tree.add_internal(label);
    for (const auto& comp : comps) {
      int child = build(comp);
      if (child < 0) return -1;
      tree.add_child(id, child);
    }
    return id;
  }
};

}  // namespace detail

/// Builds the canonical cotree of g, or returns an induced P4 when g is not a
/// cograph. Alternation falls out of the component / co-component recursion.
inline std::variant<Cotree, P4Witness> build_cotree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph has no cotree");
  std::vector<int> verts(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) verts[static_cast<std::size_t>(i)] = i;
  detail::Recognizer rec{g};
  int root = rec.build(verts);
  if (root < 0) return *rec.witness;
  rec.tree.set_root(root);
  return canonicalize(rec.tree);
}

inline bool is_cograph(const Graph& g) {
  return std::holds_alternative<Cotree>(build_cotree(g));
}

}  // namespace linco

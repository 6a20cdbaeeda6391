#include <catch2/catch_amalgamated.hpp>

#include "linco/cotree.hpp"
#include "linco/generators.hpp"
#include "linco/minor_oracle.hpp"
#include "linco/rank.hpp"
#include "support/enumerate.hpp"

using namespace linco;
namespace ts = linco::testsupport;

namespace {

RootedTree star(int leaves) {
  RootedTree t;
  t.add_node(-1);
  for (int i = 0; i < leaves; ++i) t.add_node(0);
  return t;
}

RootedTree path(int nodes) {
  RootedTree t;
  int prev = t.add_node(-1);
  for (int i = 1; i < nodes; ++i) prev = t.add_node(prev);
  return t;
}

}  // namespace

TEST_CASE("rooted tree helpers") {
  RootedTree t = star(3);
  CHECK(t.root == 0);
  CHECK(t.children[0] == std::vector<int>{1, 2, 3});
  const auto post = postorder(t);
  CHECK(post.back() == 0);  // root last
  CHECK(node_depths(path(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(tree_of_cotree(parse_cotree("S(0,1)")).children[0].size() == 2);
}

TEST_CASE("rank of elementary shapes") {
  CHECK(factorial_rank(RootedTree::single()).root_rank == 0);
  CHECK(factorial_rank(path(12)).root_rank == 0);  // contracting a path yields paths
  CHECK(factorial_rank(star(2)).root_rank == 0);
  CHECK(factorial_rank(star(3)).root_rank == 1);
  CHECK(factorial_rank(star(100)).root_rank == 1);
}

TEST_CASE("double factorial trees have rank equal to their height") {
  for (int h = 0; h <= 5; ++h) {
    RootedTree f = double_factorial_shape(h);
    CHECK(static_cast<long long>(f.parent.size()) == double_factorial_node_count(h));
    const auto ann = factorial_rank(f);
    CHECK(ann.root_rank == h);
    CHECK(is_minimally_of_rank(ann, f.root));
  }
}

TEST_CASE("minimality marks nodes whose children all rank strictly lower") {
  // Star with 3 leaves: rank 1, leaves rank 0 => minimal.
  const RootedTree s3 = star(3);
  const auto ann = factorial_rank(s3);
  CHECK(ann.minimal[0]);
  CHECK(ann.minimal[1]);  // leaves are vacuously minimal

  // Complete binary cotree of height 3: rank 1 but subtrees already rank 1.
  const Cotree b3 = gen_binary_cotree(3, NodeLabel::Series);
  const auto bann = factorial_rank(b3);
  CHECK(bann.rank[static_cast<std::size_t>(b3.root())] == 1);
  CHECK_FALSE(is_minimally_of_rank(bann, b3.root()));
}

TEST_CASE("antichain counts accumulate over children") {
  // Two stars under a fresh root: the root sees 2 disjoint rank-1 subtrees.
  RootedTree t;
  const int r = t.add_node(-1);
  for (int rep = 0; rep < 2; ++rep) {
    const int c = t.add_node(r);
    for (int i = 0; i < 3; ++i) t.add_node(c);
  }
  const auto ann = factorial_rank(t);
  CHECK(ann.root_rank == 1);
  CHECK(ann.antichain_count(r, 0) == 6);  // one disjoint subtree per leaf
  CHECK(ann.antichain_count(r, 1) == 2);
  CHECK_FALSE(is_minimally_of_rank(ann, r));  // children have rank == 1

  // Five disjoint rank-1 subtrees are enough for rank 2 (5 = 2*2+1).
  RootedTree big;
  const int root = big.add_node(-1);
  for (int rep = 0; rep < 5; ++rep) {
    const int c = big.add_node(root);
    for (int i = 0; i < 3; ++i) big.add_node(c);
  }
  CHECK(factorial_rank(big).root_rank == 2);
}

TEST_CASE("rank thresholds are downward closed") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Cotree t = gen_random_cotree(30, seed);
    const auto ann = factorial_rank(t);
    const RootedTree rt = tree_of_cotree(t);
    for (std::size_t u = 0; u < rt.parent.size(); ++u)
      for (int h = 0; h <= ann.rank[u]; ++h)
        CHECK(ann.antichain_count(static_cast<int>(u), h) >= 1);
  }
}

TEST_CASE("rank matches the contraction-minor oracle on small trees") {
  int checked = 0;
  for (const auto& t : ts::all_rooted_trees_up_to(7)) {
    REQUIRE(factorial_rank(t).root_rank == minor_oracle_rank(t));
    ++checked;
  }
  CHECK(checked == 1 + 1 + 2 + 4 + 9 + 20 + 48);
}

TEST_CASE("minor oracle finds and rejects specific shapes") {
  CHECK(contains_double_factorial_minor(star(3), 1));
  CHECK_FALSE(contains_double_factorial_minor(star(2), 1));
  CHECK_FALSE(contains_double_factorial_minor(path(12), 1));
  // Height-2 double factorial shape has 21 nodes: needs the override.
  const RootedTree f2 = double_factorial_shape(2);
  CHECK(contains_double_factorial_minor(f2, 2, true));
  CHECK_FALSE(contains_double_factorial_minor(f2, 3, true));  // size prune
  CHECK(minor_oracle_rank(f2, true) == 2);
}

TEST_CASE("minor oracle guard refuses large trees without the override") {
  const RootedTree big = path(13);
  CHECK_THROWS_AS(contains_double_factorial_minor(big, 1), guard_error);
  CHECK_THROWS_WITH(contains_double_factorial_minor(big, 1),
                    Catch::Matchers::ContainsSubstring("limit 12"));
  CHECK_NOTHROW(contains_double_factorial_minor(big, 1, true));
}

TEST_CASE("double factorial node counts follow the recurrence") {
  CHECK(double_factorial_node_count(0) == 1);
  CHECK(double_factorial_node_count(1) == 4);
  CHECK(double_factorial_node_count(2) == 21);
  CHECK(double_factorial_node_count(3) == 148);
  CHECK(double_factorial_node_count(4) == 1333);
  CHECK(double_factorial_node_count(5) == 14664);
}

TEST_CASE("rank of the complete binary cotree grows very slowly") {
  // Height 16 (65,536 leaves) still only reaches rank 5.
  const auto ann = factorial_rank(gen_binary_cotree(16, NodeLabel::Series));
  CHECK(ann.root_rank == 5);
  // Monotone in height.
  int prev = 0;
  for (int h = 1; h <= 16; ++h) {
    const int r = factorial_rank(gen_binary_cotree(h, NodeLabel::Series)).root_rank;
    CHECK(r >= prev);
    prev = r;
  }
  CHECK(factorial_rank(gen_binary_cotree(1, NodeLabel::Series)).root_rank == 0);
  CHECK(factorial_rank(gen_binary_cotree(2, NodeLabel::Series)).root_rank == 1);
}

TEST_CASE("tree codes are isomorphism invariants") {
  RootedTree a;  // root with children {leaf, path2} built in two orders
  int ra = a.add_node(-1);
  a.add_node(ra);
  int c = a.add_node(ra);
  a.add_node(c);
  RootedTree b;
  int rb = b.add_node(-1);
  int d = b.add_node(rb);
  b.add_node(d);
  b.add_node(rb);
  CHECK(rooted_tree_code(a) == rooted_tree_code(b));
  CHECK(rooted_tree_code(a) != rooted_tree_code(star(3)));
}

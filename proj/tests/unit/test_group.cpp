#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "synckit/group.hpp"

using namespace synckit;
using testutil::action_on_pairs;
using testutil::cyc;
using testutil::cyclic_group;
using testutil::make_group;
using testutil::symmetric_group;

TEST_CASE("group order") {
  CHECK(group_order(symmetric_group(5)) == 120);
  CHECK(group_order(cyclic_group(3)) == 3);
}

TEST_CASE("group order matches brute force on small groups") {
  for (auto G : {symmetric_group(4), cyclic_group(6),
                 make_group(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{2, 3, 5, 4}})}),
                 action_on_pairs(symmetric_group(5))}) {
    CHECK(group_order(G) == testutil::brute_force_order(G));
  }
}

TEST_CASE("orbits on 2-subsets") {
  // Sym(5) on 2-subsets: Petersen/Johnson action, m = 2
  auto G = action_on_pairs(symmetric_group(5));
  auto po = orbits_on_2subsets(G);
  CHECK(po.m == 2);
  std::size_t total = 0;
  for (auto s : po.sizes) total += s;
  CHECK(total == 45);  // C(10,2)

  // 2-transitive group: m = 1
  CHECK(orbits_on_2subsets(symmetric_group(6)).m == 1);
  CHECK(is_2set_transitive(symmetric_group(6)));
  CHECK_FALSE(is_2set_transitive(G));

  // C5: 2 orbits of size 5
  auto po5 = orbits_on_2subsets(cyclic_group(5));
  CHECK(po5.m == 2);
  CHECK(po5.sizes == std::vector<std::size_t>{5, 5});

  // dihedral D5: still 2 pair-orbits
  auto d5 = make_group(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{2, 5}, {3, 4}})});
  CHECK(orbits_on_2subsets(d5).m == 2);
}

TEST_CASE("pair indexing round trip") {
  const std::size_t n = 11;
  std::size_t id = 0;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b, ++id) {
      CHECK(pair_index(n, a, b) == id);
      CHECK(pair_from_index(n, id) == std::pair<Point, Point>{a, b});
    }
}

TEST_CASE("primitivity") {
  CHECK_FALSE(is_primitive(cyclic_group(4)));  // blocks {1,3},{2,4}
  CHECK(is_primitive(cyclic_group(5)));        // prime degree
  CHECK(is_primitive(action_on_pairs(symmetric_group(5))));
  CHECK(is_primitive(symmetric_group(4)));
  // Sym(4) acting on 4+4... D4 on 4 points is imprimitive
  auto d4 = make_group(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{2, 4}})});
  CHECK_FALSE(is_primitive(d4));
}

TEST_CASE("point stabilizer") {
  auto G = symmetric_group(4);
  auto H = stabilizer(G, 3);
  CHECK(group_order(H) == 6);
  for (const Perm& g : H.generators) CHECK(g[3] == 3);

  // orbit-stabilizer for a transitive group
  auto K = action_on_pairs(symmetric_group(5));
  CHECK(group_order(stabilizer(K, 0)) * 10 == group_order(K));

  // regular action: trivial stabilizer
  CHECK(group_order(stabilizer(cyclic_group(5), 0)) == 1);
}

TEST_CASE("coset action on a point stabilizer is the natural action") {
  auto G = symmetric_group(4);
  auto H = make_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3}})});
  auto A = coset_action(G, H.generators);
  CHECK(A.degree == 4);
  CHECK(group_order(A) == 24);
  CHECK(is_transitive(A));
}

TEST_CASE("coset action on setwise stabilizer gives the pair action") {
  auto G = symmetric_group(5);
  // setwise stabilizer of {1,2}: Sym({1,2}) x Sym({3,4,5}), order 12
  auto H = make_group(5, {cyc(5, {{1, 2}}), cyc(5, {{3, 4}}), cyc(5, {{3, 4, 5}})});
  CHECK(group_order(H) == 12);  // sanity
  auto A = coset_action(G, H.generators);
  CHECK(A.degree == 10);
  auto po = orbits_on_2subsets(A);
  CHECK(po.m == 2);
  // equivalent to the 2-subset action: compare orbit size multisets
  auto po2 = orbits_on_2subsets(action_on_pairs(G));
  std::multiset<std::size_t> s1(po.sizes.begin(), po.sizes.end());
  std::multiset<std::size_t> s2(po2.sizes.begin(), po2.sizes.end());
  CHECK(s1 == s2);
}

TEST_CASE("coset action index bound") {
  auto G = symmetric_group(5);
  auto H = make_group(5, {Perm::identity(5)});
  CHECK_THROWS_AS(coset_action(G, H.generators, 100), ResourceError);
  // H not a subgroup
  auto A4 = make_group(4, {cyc(4, {{1, 2, 3}}), cyc(4, {{2, 3, 4}})});
  CHECK_THROWS_AS(coset_action(A4, {cyc(4, {{1, 2}})}), PreconditionError);
}

TEST_CASE("grp file parse and save round trip") {
  std::istringstream in(
      "degree 5\n"
      "name test group\n"
      "type almost-simple\n"
      "perm 2 1 3 4 5\n"
      "perm 2 3 4 5 1\n");
  auto G = GroupSpec::parse_grp(in, "test");
  CHECK(G.degree == 5);
  CHECK(G.name == "test group");
  CHECK(G.onss_type == OnssType::AlmostSimple);
  CHECK(G.generators.size() == 2);
  CHECK(group_order(G) == 120);
}

TEST_CASE("grp parse errors carry line numbers") {
  std::istringstream bad1("degree 5\nperm 1 2 3\n");
  CHECK_THROWS_AS(GroupSpec::parse_grp(bad1, "t"), ParseError);
  std::istringstream bad2("degree 5\nperm 1 2 3 4 9\n");
  CHECK_THROWS_AS(GroupSpec::parse_grp(bad2, "t"), ParseError);
  std::istringstream bad3("degree 5\nfoo 1\n");
  CHECK_THROWS_AS(GroupSpec::parse_grp(bad3, "t"), ParseError);
  std::istringstream bad4("perm 1 2 3\n");
  CHECK_THROWS_AS(GroupSpec::parse_grp(bad4, "t"), ParseError);
  std::istringstream bad5("degree 3\nperm 1 2 3 junk\n");
  CHECK_THROWS_AS(GroupSpec::parse_grp(bad5, "t"), ParseError);
}

TEST_CASE("affine canonical indexing and translations") {
  // degree 9 = 3^2: point i <-> digits of i-1, least significant first
  auto v = affine_vector_of_point(5, 3, 2);  // internal 5 = 1-based point 6
  CHECK(v == std::vector<std::uint32_t>{2, 1});
  CHECK(affine_point_of_vector(v, 3) == 5);

  auto t = translation_perm({1, 0}, 3);
  CHECK(t.degree() == 9);
  // adding e1 wraps the first coordinate: (2,1) -> (0,1)
  CHECK(t[5] == affine_point_of_vector({0, 1}, 3));

  GroupSpec G;
  G.degree = 9;
  G.affine = AffineParams{3, 2};
  G.generators = {translation_perm({1, 0}, 3), translation_perm({0, 1}, 3)};
  StabChain chain(9, G.generators);
  CHECK_NOTHROW(validate_affine(G, chain));
  CHECK(chain.order() == 9);
}

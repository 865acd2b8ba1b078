#include <doctest.h>

#include <sstream>

#include "graphs.hpp"
#include "helpers.hpp"
#include "synckit/graph.hpp"

using namespace synckit;
using testutil::action_on_pairs;
using testutil::cyclic_group;
using testutil::petersen;
using testutil::symmetric_group;

TEST_CASE("orbital graph of the disjoint-pairs orbit is Petersen") {
  auto G = action_on_pairs(symmetric_group(5));
  auto po = orbits_on_2subsets(G);
  REQUIRE(po.m == 2);
  // one of the two orbital graphs is 3-regular (Petersen), the other is T(5)
  Graph g0 = generalized_orbital_graph(po, 1);
  Graph g1 = generalized_orbital_graph(po, 2);
  Graph* pet = g0.regular_degree() == 3 ? &g0 : &g1;
  Graph* t5 = pet == &g0 ? &g1 : &g0;
  CHECK(pet->regular_degree() == 3);
  CHECK(t5->regular_degree() == 6);
  CHECK(*pet == petersen());

  // full mask gives the complete graph
  Graph full = generalized_orbital_graph(po, 3);
  CHECK(full.is_complete());

  // G-invariance of every orbital graph
  for (const Perm& g : G.generators) {
    CHECK(is_invariant_under(g0, g));
    CHECK(is_invariant_under(g1, g));
  }
}

TEST_CASE("C5 orbital graph is a 5-cycle") {
  auto po = orbits_on_2subsets(cyclic_group(5));
  REQUIRE(po.m == 2);
  Graph g = generalized_orbital_graph(po, 1);
  CHECK(g.regular_degree() == 2);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
}

TEST_CASE("complement") {
  CHECK(testutil::complete(6).complement().is_null());
  Graph p = petersen();
  CHECK(p.complement().regular_degree() == 6);  // T(5)
  auto r = testutil::random_graph(17, 0.4, 99);
  CHECK(r.complement().complement() == r);
}

TEST_CASE("degree_of") {
  CHECK(petersen().regular_degree() == 3);
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(star.regular_degree() == -1);  // irregular
}

TEST_CASE("dimacs round trip and ordering") {
  Graph p = petersen();
  std::string text = p.to_dimacs();
  std::istringstream in(text);
  Graph q = Graph::from_dimacs(in, "mem");
  CHECK(p == q);
  // header and lexicographic edge order are bit-exact
  CHECK(text.substr(0, 13) == "p edge 10 15\n");
  std::istringstream lines(text);
  std::string l1;
  std::getline(lines, l1);
  std::getline(lines, l1);
  CHECK(l1 == "e 1 8");  // {1,2} is disjoint from {3,4}, the 8th pair
}

TEST_CASE("dimacs parse errors") {
  std::istringstream a("e 1 2\n");
  CHECK_THROWS_AS(Graph::from_dimacs(a, "t"), ParseError);
  std::istringstream b("p edge 3 1\ne 1 4\n");
  CHECK_THROWS_AS(Graph::from_dimacs(b, "t"), ParseError);
  std::istringstream c("p edge 3 2\ne 1 2\n");
  CHECK_THROWS_AS(Graph::from_dimacs(c, "t"), ParseError);  // count mismatch
  std::istringstream d("p edge 3 2\ne 1 2\ne 1 2\n");
  CHECK_THROWS_AS(Graph::from_dimacs(d, "t"), ParseError);  // duplicate
}

TEST_CASE("2^m - 2 distinct generalized orbital graphs") {
  auto G = action_on_pairs(symmetric_group(5));
  auto po = orbits_on_2subsets(G);
  std::set<std::vector<std::pair<Point, Point>>> distinct;
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << po.m); ++mask) {
    distinct.insert(generalized_orbital_graph(po, mask).edges());
    ++count;
  }
  CHECK(count == (std::uint64_t(1) << po.m) - 2);
  CHECK(distinct.size() == count);
}

#include <doctest.h>

#include "graphs.hpp"
#include "helpers.hpp"
#include "synckit/colouring.hpp"
#include "synckit/verify.hpp"

using namespace synckit;
using testutil::brute_force_chi;
using testutil::cyc;
using testutil::cycle;
using testutil::petersen;
using testutil::random_graph;

TEST_CASE("petersen colourings") {
  CHECK_FALSE(chromatic_le(petersen(), 2).has_value());  // odd cycle inside
  auto c3 = chromatic_le(petersen(), 3);
  REQUIRE(c3.has_value());
  CHECK(check::proper_colouring(petersen(), c3->classes));
  CHECK(c3->size() <= 3);
}

TEST_CASE("chromatic_le agrees with brute force") {
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    std::size_t n = 5 + seed % 8;
    Graph g = random_graph(n, 0.2 + 0.06 * (seed % 10), seed * 13 + 1);
    std::size_t chi = brute_force_chi(g);
    for (std::size_t k = chi > 1 ? chi - 1 : 0; k <= chi + 1; ++k) {
      auto col = chromatic_le(g, k);
      CHECK(col.has_value() == (k >= chi));
      if (col) {
        CHECK(check::proper_colouring(g, col->classes));
        CHECK(col->size() <= k);
      }
    }
  }
}

TEST_CASE("class size cap") {
  // C6 is bipartite but with class size cap 2 needs 3 classes
  ColouringOptions cap2;
  cap2.max_class_size = 2;
  auto c = chromatic_le(cycle(6), 2, cap2);
  CHECK_FALSE(c.has_value());
  auto c3 = chromatic_le(cycle(6), 3, cap2);
  REQUIRE(c3.has_value());
  for (const auto& cl : c3->classes) CHECK(cl.size() <= 2);
}

TEST_CASE("classwise invariant colouring") {
  // trivial K reduces to chromatic_le
  auto id = Perm::identity(10);
  auto a = classwise_invariant_colouring(petersen(), {id}, 3);
  REQUIRE(a.has_value());
  CHECK(check::proper_colouring(petersen(), a->classes));

  // C6 with K = rotation by 2: orbits {1,3,5},{2,4,6} are the bipartition
  auto rot2 = cyc(6, {{1, 3, 5}, {2, 4, 6}});
  auto b = classwise_invariant_colouring(cycle(6), {rot2}, 2);
  REQUIRE(b.has_value());
  CHECK(b->size() == 2);
  CHECK(b->classes[0] == std::vector<Point>{0, 2, 4});

  // C5 with the full rotation: the single orbit is not a coclique
  auto rot = cyc(5, {{1, 2, 3, 4, 5}});
  CHECK_FALSE(classwise_invariant_colouring(cycle(5), {rot}, 5).has_value());

  // non-automorphism K is rejected
  auto bad = cyc(10, {{1, 2}});
  CHECK_THROWS_AS(classwise_invariant_colouring(petersen(), {bad}, 3),
                  PreconditionError);
}

TEST_CASE("non-synchronizing graph decision") {
  // Petersen: omega 2, chi 3 -> not non-synchronizing
  auto pet = is_non_synchronizing_graph(petersen());
  CHECK_FALSE(pet.non_synchronizing);
  CHECK(pet.omega == 2);

  // complete and null graphs excluded by definition
  CHECK_FALSE(is_non_synchronizing_graph(testutil::complete(5)).non_synchronizing);
  CHECK_FALSE(is_non_synchronizing_graph(Graph(5)).non_synchronizing);

  // C4: omega = chi = 2
  auto c4 = is_non_synchronizing_graph(cycle(4));
  CHECK(c4.non_synchronizing);
  CHECK(c4.omega == 2);
  REQUIRE(c4.colouring.has_value());
  CHECK(c4.colouring->size() == 2);
  CHECK(check::clique(cycle(4), c4.clique));
  CHECK(check::proper_colouring(cycle(4), c4.colouring->classes));
}

TEST_CASE("colouring text output") {
  Colouring c{{{0, 2}, {1, 3}}};
  CHECK(colouring_to_text(c) == "class 1: 1 3\nclass 2: 2 4\n");
}

#include <doctest.h>

#include "helpers.hpp"
#include "synckit/perm.hpp"
#include "synckit/stabchain.hpp"

using namespace synckit;
using testutil::cyc;

TEST_CASE("apply and compose") {
  Perm id = Perm::identity(5);
  CHECK(id[2] == 2);  // identity on point 3 (1-based)

  Perm g = Perm::from_one_based({2, 3, 1});  // (1 2 3)
  CHECK(g[0] == 1);
  CHECK((g * g.inverse()).is_identity());
  for (Point x = 0; x < 3; ++x) CHECK(g.inverse()[g[x]] == x);

  Perm a = cyc(4, {{1, 2}});
  Perm b = cyc(4, {{2, 3}});
  // right action: x^(ab) = (x^a)^b
  CHECK((a * b)[0] == 2);
}

TEST_CASE("perm validation") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Perm::from_one_based({1, 2, 4}), PreconditionError);
}

TEST_CASE("perm order") {
  CHECK(cyc(6, {{1, 2, 3}, {4, 5}}).order() == 6);
  CHECK(Perm::identity(4).order() == 1);
}

TEST_CASE("stabilizer chain order") {
  // Sym(5): order 120
  StabChain s5(5, {cyc(5, {{1, 2}}), cyc(5, {{1, 2, 3, 4, 5}})});
  CHECK(s5.order() == 120);

  StabChain c3(3, {cyc(3, {{1, 2, 3}})});
  CHECK(c3.order() == 3);

  // membership
  CHECK(s5.contains(cyc(5, {{2, 5, 3}})));
  StabChain a4(4, {cyc(4, {{1, 2, 3}}), cyc(4, {{2, 3, 4}})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(cyc(4, {{1, 2}})));  // odd permutation
}

TEST_CASE("stabilizer chain with forced base prefix") {
  StabChain s4(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})}, {3});
  CHECK(s4.order() == 24);
  auto stab = s4.stabilizer_generators(1);
  StabChain sub(4, stab);
  CHECK(sub.order() == 6);  // Sym(3) fixing point 4
  for (const Perm& g : stab) CHECK(g[3] == 3);
}

TEST_CASE("element enumeration matches order") {
  StabChain s4(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
  std::size_t count = 0;
  std::set<std::vector<Point>> distinct;
  s4.for_each_element([&](const Perm& g) {
    ++count;
    distinct.insert(g.images());
  });
  CHECK(count == 24);
  CHECK(distinct.size() == 24);
}

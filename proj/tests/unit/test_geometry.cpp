#include <doctest.h>

#include "synckit/geometry.hpp"
#include "synckit/verify.hpp"

using namespace synckit;

TEST_CASE("field tables satisfy the field axioms exhaustively for q <= 16") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const GF& F = GF::get(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
    // Frobenius is a field automorphism fixing the prime field
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      }
  }
}

TEST_CASE("pinned irreducibles") {
  CHECK(GF::get(4).modulus() == std::vector<std::uint32_t>{1, 1});    // x^2+x+1
  CHECK(GF::get(9).modulus() == std::vector<std::uint32_t>{1, 0});    // x^2+1
  // lex on (c0,...,c3): x^4+x^3+1 precedes x^4+x+1
  CHECK(GF::get(16).modulus() == std::vector<std::uint32_t>{1, 0, 0, 1});
}

TEST_CASE("projective space counts") {
  auto pg32 = ProjectiveSpace::make(2, 4);
  CHECK(pg32.points.size() == 15);  // (2^4-1)/(2-1)
  auto pg33 = ProjectiveSpace::make(3, 4);
  CHECK(pg33.points.size() == 40);
  auto pg24 = ProjectiveSpace::make(4, 3);
  CHECK(pg24.points.size() == 21);

  // lines through two points have q+1 points
  CHECK(pg32.line_through(0, 1).size() == 3);
  CHECK(pg33.line_through(0, 1).size() == 4);
}

TEST_CASE("pg3 line graph q=2") {
  auto fg = pg3_line_graph(2);
  CHECK(fg.graph.order() == 35);  // (q^2+1)(q^2+q+1)
  CHECK(fg.expected_omega == 7);
  CHECK(fg.certified());
  CHECK(fg.colouring->size() == 7);  // packing into 7 spreads
  for (const auto& spread : fg.colouring->classes) CHECK(spread.size() == 5);
  // two lines sharing a point are adjacent: the pencil is a clique
  CHECK(check::clique(fg.graph, fg.clique));
}

TEST_CASE("symplectic complement q=2") {
  auto fg = symplectic_complement_graph(2);
  CHECK(fg.graph.order() == 15);
  CHECK(fg.expected_omega == 5);
  CHECK(fg.certified());
  CHECK(fg.colouring->size() == 5);  // a spread of W(3,2)
  CHECK_THROWS_AS(symplectic_complement_graph(3), PreconditionError);
}

TEST_CASE("nu3 q=2") {
  auto fg = nu3_graph(2);
  CHECK(fg.graph.order() == 12);  // 21 - 9
  CHECK(fg.expected_omega == 4);
  CHECK(fg.certified());
  CHECK(fg.colouring->size() == 4);
}

TEST_CASE("hermitian point graph q=2") {
  auto fg = hermitian_point_graph(2);
  CHECK(fg.graph.order() == 45);
  CHECK(fg.expected_omega == 5);
  CHECK(fg.graph.regular_degree() == 12);
  CHECK(fg.certified());
  CHECK(fg.colouring->size() == 5);  // fan of 5 ovoids
  for (const auto& ovoid : fg.colouring->classes) CHECK(ovoid.size() == 9);
}

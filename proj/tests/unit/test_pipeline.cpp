#include <doctest.h>

#include <sstream>

#include "graphs.hpp"
#include "helpers.hpp"
#include "synckit/pipeline.hpp"
#include "synckit/report.hpp"
#include "synckit/verify.hpp"

using namespace synckit;
using testutil::action_on_pairs;
using testutil::cyc;
using testutil::cyclic_group;
using testutil::make_group;
using testutil::symmetric_group;

namespace {

// affine permutation group helpers over GF(p)^2
Perm matrix_perm(std::uint32_t p, std::array<std::uint32_t, 4> m) {
  std::size_t n = p * p;
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) {
    auto v = affine_vector_of_point(x, p, 2);
    std::vector<std::uint32_t> w{(m[0] * v[0] + m[1] * v[1]) % p,
                                 (m[2] * v[0] + m[3] * v[1]) % p};
    img[x] = affine_point_of_vector(w, p);
  }
  return Perm(std::move(img));
}

GroupSpec affine36() {
  // GF(3)^2 translations with (x,y) -> (y,-x)
  GroupSpec G;
  G.degree = 9;
  G.name = "3^2:C4";
  G.onss_type = OnssType::Affine;
  G.affine = AffineParams{3, 2};
  G.generators = {translation_perm({1, 0}, 3), translation_perm({0, 1}, 3),
                  matrix_perm(3, {0, 1, 2, 0})};
  return G;
}

GroupSpec agl23() {
  GroupSpec G;
  G.degree = 9;
  G.name = "AGL(2, 3)";
  G.onss_type = OnssType::Affine;
  G.affine = AffineParams{3, 2};
  G.generators = {translation_perm({1, 0}, 3), translation_perm({0, 1}, 3),
                  matrix_perm(3, {1, 1, 0, 1}), matrix_perm(3, {2, 0, 0, 1}),
                  matrix_perm(3, {0, 1, 1, 0})};
  return G;
}

Config test_config() {
  Config cfg;
  cfg.threads = 2;
  cfg.seed_builtin_library = false;
  return cfg;
}

}  // namespace

TEST_CASE("prime degree is separating") {
  NonSyncLibrary lib;
  auto rep = classify(cyclic_group(7), lib, test_config());
  CHECK(rep.status == Status::Separating);
  CHECK(rep.rule == "prime-degree");
  CHECK(rep.order == 7);
}

TEST_CASE("2-set-transitive is separating") {
  NonSyncLibrary lib;
  auto rep = classify(symmetric_group(6), lib, test_config());
  CHECK(rep.status == Status::Separating);
  CHECK(rep.rule == "2-set-transitive");
}

TEST_CASE("imprimitive input gets a distinct diagnostic") {
  NonSyncLibrary lib;
  auto rep = classify(cyclic_group(4), lib, test_config());
  CHECK(rep.status == Status::Imprimitive);
}

TEST_CASE("intransitive input is a precondition error") {
  NonSyncLibrary lib;
  auto G = make_group(4, {cyc(4, {{1, 2}})}, "intransitive");
  CHECK_THROWS_AS(classify(G, lib, test_config()), PreconditionError);
}

TEST_CASE("Sym(5) on pairs is separating by the pair sweep") {
  NonSyncLibrary lib;
  auto G = action_on_pairs(symmetric_group(5));
  auto rep = classify(G, lib, test_config());
  CHECK(rep.status == Status::Separating);
  CHECK(rep.rule == "pair-sweep");
  // omega(Petersen) * omega(T(5)) = 2*4 = 8 < 10
}

TEST_CASE("affine test 1: AGL(2,3) zero stabilizer is line-transitive") {
  auto G = agl23();
  CHECK(group_order(G) == 432);  // 9 * 48
  StabChain chain(G.degree, G.generators);
  auto out = affine_tests(G, chain);
  CHECK(out.kind == AffineOutcome::Kind::Separating);
}

TEST_CASE("affine test 2: the order-36 group is non-synchronizing") {
  auto G = affine36();
  CHECK(group_order(G) == 36);
  StabChain chain(G.degree, G.generators);
  auto out = affine_tests(G, chain);
  REQUIRE(out.kind == AffineOutcome::Kind::NonSynchronizing);
  CHECK(out.clique.size() == 3);
  CHECK(out.colouring.size() == 3);
  CHECK(check::clique(out.graph, out.clique));
  CHECK(check::proper_colouring(out.graph, out.colouring.classes));
  CHECK(check::invariant(out.graph, G.generators));

  NonSyncLibrary lib;
  auto rep = classify(G, lib, test_config());
  CHECK(rep.status == Status::NonSynchronizing);
  CHECK(rep.rule == "affine-test-2");
  REQUIRE(rep.witness.omega.has_value());
  CHECK(*rep.witness.omega == 3);
  REQUIRE(rep.witness.colouring.has_value());
  CHECK(rep.witness.colouring->size() == 3);
}

TEST_CASE("library match decides without clique search") {
  // the order-36 affine group, but without affine metadata: rule 4 matches
  // its rook-graph orbital against the seeded H(2,3)
  auto G = affine36();
  G.affine.reset();
  G.onss_type = OnssType::Unknown;
  auto lib = NonSyncLibrary::builtin_seeds();
  auto rep = classify(G, lib, test_config());
  CHECK(rep.status == Status::NonSynchronizing);
  CHECK(rep.rule == "library-isomorphism");
  REQUIRE(rep.witness.colouring.has_value());
  CHECK(rep.witness.colouring->size() == 3);
  REQUIRE(rep.witness.graph.has_value());
  CHECK(check::proper_colouring(*rep.witness.graph,
                                rep.witness.colouring->classes));
}

TEST_CASE("colouring search certifies without metadata or library") {
  // same group, no library: the pair sweep finds it non-separating and the
  // exact-cover colouring route certifies chi = omega
  auto G = affine36();
  G.affine.reset();
  G.onss_type = OnssType::Unknown;
  NonSyncLibrary lib;
  auto rep = classify(G, lib, test_config());
  CHECK(rep.status == Status::NonSynchronizing);
  CHECK(rep.rule == "colouring-certificate");
  CHECK(lib.entries().size() == 1);  // the certified graph joined the library
}

TEST_CASE("theorem-2 shortcut for affine type skips nothing at this size") {
  // keep the affine tag but strip the affine params: rule 3 cannot run, the
  // pair sweep finds non-separating, and the colouring search still finds a
  // certificate (sound for every type)
  auto G = affine36();
  G.affine.reset();
  NonSyncLibrary lib;
  auto rep = classify(G, lib, test_config());
  CHECK(rep.status == Status::NonSynchronizing);
}

TEST_CASE("batch orders by degree then non-increasing order") {
  auto a = action_on_pairs(symmetric_group(5));  // degree 10, order 120
  a.name = "Sym(5) on pairs";
  auto b = make_group(10, {cyc(10, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                           cyc(10, {{2, 10}, {3, 9}, {4, 8}, {5, 7}})},
                      "D10");
  CHECK(group_order(b) == 20);
  auto c = cyclic_group(7);
  NonSyncLibrary lib;
  auto result = batch({b, c, a}, lib, test_config());
  REQUIRE(result.reports.size() == 3);
  CHECK(result.reports[0].name == "C7");
  CHECK(result.reports[1].name == "Sym(5) on pairs");  // order 120 first
  CHECK(result.reports[2].name == "D10");
  CHECK(result.table4_csv.find("7,C7,separating") != std::string::npos);
}

TEST_CASE("batch isolates per-group errors") {
  auto bad = make_group(4, {cyc(4, {{1, 2}})}, "broken");
  NonSyncLibrary lib;
  auto result = batch({bad, cyclic_group(5)}, lib, test_config());
  REQUIRE(result.reports.size() == 2);
  CHECK(result.reports[0].rule == "error");
  CHECK(result.reports[1].status == Status::Separating);
}

TEST_CASE("report json shape") {
  NonSyncLibrary lib;
  auto rep = classify(cyclic_group(7), lib, test_config());
  auto json = report_to_json(rep, false);
  CHECK(json.find("\"name\": \"C7\"") != std::string::npos);
  CHECK(json.find("\"status\": \"separating\"") != std::string::npos);
  CHECK(json.find("\"rule\": \"prime-degree\"") != std::string::npos);
  CHECK(json.find("\"timings_ms\"") != std::string::npos);
  // byte-identical across reruns
  auto rep2 = classify(cyclic_group(7), lib, test_config());
  CHECK(report_to_json(rep2, false) == json);
}

TEST_CASE("classify determinism across thread counts") {
  auto G = affine36();
  G.affine.reset();
  G.onss_type = OnssType::Unknown;
  Config c1 = test_config();
  c1.threads = 1;
  Config c4 = test_config();
  c4.threads = 4;
  NonSyncLibrary l1, l4;
  auto r1 = report_to_json(classify(G, l1, c1), false);
  auto r4 = report_to_json(classify(G, l4, c4), false);
  CHECK(r1 == r4);
}

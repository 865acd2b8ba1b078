#include <doctest.h>

#include "graphs.hpp"
#include "synckit/families.hpp"
#include "synckit/isomorphism.hpp"
#include "synckit/verify.hpp"

using namespace synckit;

TEST_CASE("hamming graphs") {
  auto h23 = hamming(2, 3);
  CHECK(h23.graph.order() == 9);
  CHECK(h23.graph.regular_degree() == 4);
  CHECK(h23.expected_omega == 3);
  CHECK(h23.certified());
  CHECK_NOTHROW(verify_family_certificate(h23));

  auto h22 = hamming(2, 2);  // the 4-cycle
  CHECK(h22.graph.order() == 4);
  CHECK(h22.graph.edge_count() == 4);
  CHECK(h22.expected_omega == 2);

  auto h33 = hamming(3, 3);
  CHECK(h33.graph.order() == 27);
  CHECK(h33.graph.regular_degree() == 6);
  CHECK(h33.certified());

  CHECK_THROWS_AS(hamming(1, 3), PreconditionError);
  CHECK_THROWS_AS(hamming(2, 1), PreconditionError);
}

TEST_CASE("kneser complement") {
  auto k42 = kneser_complement(4, 2);
  CHECK(k42.graph.order() == 6);
  CHECK(k42.expected_omega == 3);
  CHECK(k42.certified());
  CHECK(k42.colouring->size() == 3);

  auto k62 = kneser_complement(6, 2);  // T(6)
  CHECK(k62.graph.order() == 15);
  CHECK(k62.expected_omega == 5);
  CHECK(k62.certified());
  CHECK(k62.colouring->size() == 5);  // 1-factorization of K6

  auto k63 = kneser_complement(6, 3);
  CHECK(k63.graph.order() == 20);
  CHECK(k63.expected_omega == 10);
  CHECK(k63.certified());

  CHECK_THROWS_AS(kneser_complement(5, 2), PreconditionError);  // k | n fails
  CHECK_THROWS_AS(kneser_complement(4, 4), PreconditionError);
}

TEST_CASE("johnson distance one") {
  CHECK_THROWS_AS(johnson_distance_one(8), PreconditionError);
  CHECK_THROWS_AS(johnson_distance_one(11), PreconditionError);
  try {
    johnson_distance_one(8);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("Steiner") != std::string::npos);
  }

  auto j9 = johnson_distance_one(9);
  CHECK(j9.graph.order() == 84);
  CHECK(j9.expected_omega == 7);
  CHECK(j9.certified());
  CHECK(j9.colouring->size() == 7);
  for (const auto& cl : j9.colouring->classes) CHECK(cl.size() == 12);
  // the clique: all triples containing {1,2} accepted by the checker
  CHECK(check::clique(j9.graph, j9.clique));
  CHECK(j9.clique.size() == 7);
}

TEST_CASE("partition graph") {
  auto p62 = partition_graph(6, 2);
  CHECK(p62.graph.order() == 15);  // perfect matchings of K6
  CHECK(p62.expected_omega == 5);
  CHECK(p62.certified());
  CHECK(p62.colouring->size() == 5);
  // Petersen: matchings adjacent when sharing no edge is the Kneser-type
  // graph on 15 vertices... it is 8-regular
  CHECK(p62.graph.regular_degree() == 8);

  CHECK_THROWS_AS(partition_graph(4, 2), PreconditionError);  // n/k = 2
  CHECK_THROWS_AS(partition_graph(9, 2), PreconditionError);  // k | n fails
}

TEST_CASE("family graphs pass the non-synchronizing decision") {
  auto h = hamming(2, 3);
  auto cert = is_non_synchronizing_graph(h.graph);
  CHECK(cert.non_synchronizing);
  CHECK(cert.omega == 3);

  auto k = kneser_complement(4, 2);
  auto kc = is_non_synchronizing_graph(k.graph);
  CHECK(kc.non_synchronizing);
  CHECK(kc.omega == 3);
}

TEST_CASE("labels sidecar") {
  auto h = hamming(2, 2);
  auto text = labels_to_text(h);
  CHECK(text == "v 1 (0,0)\nv 2 (0,1)\nv 3 (1,0)\nv 4 (1,1)\n");
}

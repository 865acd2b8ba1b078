#include <doctest.h>

#include <numeric>

#include "graphs.hpp"
#include "synckit/isomorphism.hpp"

using namespace synckit;
using testutil::petersen;
using testutil::random_graph;

namespace {

Graph relabel(const Graph& g, const std::vector<Point>& map) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(map[u], map[v]);
  return h;
}

// brute force over all vertex bijections, n <= 9
bool brute_iso(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<Point> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Point u = 0; u < a.order() && ok; ++u)
      for (Point v = u + 1; v < a.order(); ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("petersen is kneser(5,2) under any relabelling") {
  Graph p = petersen();
  std::mt19937 rng(7);
  std::vector<Point> map(10);
  std::iota(map.begin(), map.end(), 0);
  std::shuffle(map.begin(), map.end(), rng);
  Graph q = relabel(p, map);
  auto iso = find_isomorphism(p, q);
  REQUIRE(iso.has_value());
  for (auto [u, v] : p.edges()) CHECK(q.has_edge((*iso)[u], (*iso)[v]));
}

TEST_CASE("petersen vs T(5) differ") {
  CHECK_FALSE(is_isomorphic(petersen(), petersen().complement()));
}

TEST_CASE("C6 vs two triangles") {
  Graph c6 = testutil::cycle(6);
  Graph two_k3(6);
  for (Point i = 0; i < 3; ++i)
    for (Point j = i + 1; j < 3; ++j) {
      two_k3.add_edge(i, j);
      two_k3.add_edge(Point(i + 3), Point(j + 3));
    }
  CHECK_FALSE(is_isomorphic(c6, two_k3));  // same degree sequence, different
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    std::size_t n = 5 + seed % 4;
    Graph a = random_graph(n, 0.4, seed);
    Graph b = random_graph(n, 0.4, seed + 1000);
    CHECK(is_isomorphic(a, b) == brute_iso(a, b));
    // reflexivity under relabelling
    std::mt19937 rng(seed);
    std::vector<Point> map(n);
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    CHECK(is_isomorphic(a, relabel(a, map)));
  }
}

TEST_CASE("iso is symmetric on the corpus") {
  Graph a = random_graph(12, 0.5, 5);
  Graph b = random_graph(12, 0.5, 6);
  CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
  CHECK(is_isomorphic(a, a));
}

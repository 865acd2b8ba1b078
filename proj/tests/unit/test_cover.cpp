#include <doctest.h>

#include "graphs.hpp"
#include "helpers.hpp"
#include "synckit/cover.hpp"
#include "synckit/verify.hpp"

using namespace synckit;
using testutil::action_on_pairs;
using testutil::cyc;
using testutil::symmetric_group;

namespace {

// independent brute-force exact cover: cover the smallest uncovered point
bool brute_cover(std::size_t ground, const std::vector<std::vector<Point>>& sets,
                 std::vector<bool>& covered, std::vector<bool>& used) {
  std::size_t x = ground;
  for (std::size_t i = 0; i < ground; ++i)
    if (!covered[i]) {
      x = i;
      break;
    }
  if (x == ground) return true;
  for (std::size_t si = 0; si < sets.size(); ++si) {
    if (used[si]) continue;
    bool contains = false, clash = false;
    for (Point p : sets[si]) {
      if (p == x) contains = true;
      if (covered[p]) clash = true;
    }
    if (!contains || clash) continue;
    for (Point p : sets[si]) covered[p] = true;
    used[si] = true;
    if (brute_cover(ground, sets, covered, used)) return true;
    for (Point p : sets[si]) covered[p] = false;
    used[si] = false;
  }
  return false;
}

bool brute_cover(std::size_t ground,
                 const std::vector<std::vector<Point>>& sets) {
  std::vector<bool> covered(ground, false), used(sets.size(), false);
  return brute_cover(ground, sets, covered, used);
}

std::vector<std::vector<Point>> random_sets(std::size_t ground,
                                            std::size_t count,
                                            std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::vector<Point>> sets;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Point> s;
    for (Point p = 0; p < ground; ++p)
      if (rng() % 3 == 0) s.push_back(p);
    if (!s.empty()) sets.push_back(s);
  }
  return sets;
}

}  // namespace

TEST_CASE("exact cover agrees with brute force") {
  for (std::uint32_t seed = 0; seed < 60; ++seed) {
    std::size_t ground = 6 + seed % 5;
    auto sets = random_sets(ground, 4 + seed % 8, seed);
    if (sets.empty()) continue;
    auto got = exact_cover(ground, sets);
    CHECK(got.has_value() == brute_cover(ground, sets));
    if (got) {
      std::vector<std::vector<Point>> parts;
      for (auto i : *got) parts.push_back(sets[i]);
      CHECK(check::exact_cover_of(ground, parts));
    }
  }
}

TEST_CASE("exact cover equals the weighted-clique reduction") {
  for (std::uint32_t seed = 100; seed < 130; ++seed) {
    std::size_t ground = 7 + seed % 4;
    auto sets = random_sets(ground, 6 + seed % 6, seed);
    if (sets.empty()) continue;
    auto direct = exact_cover(ground, sets);
    auto inst = cover_as_wclique(ground, sets);
    auto reduced = vector_weighted_clique(inst.wg, inst.target);
    CHECK(direct.has_value() == reduced.has_value());
    if (reduced) {
      std::vector<std::vector<Point>> parts;
      for (auto i : *reduced) parts.push_back(sets[i]);
      CHECK(check::exact_cover_of(ground, parts));
    }
  }
}

TEST_CASE("unconstrained matching cover of 6 points") {
  // seeds: one perfect matching of K6's vertex set as three 2-subsets
  CoverInstance inst;
  inst.ground = 6;
  inst.seeds = {{0, 1}, {2, 3}, {4, 5}};
  inst.group = symmetric_group(6);
  auto cover = exact_cover_invariant(inst);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 3);
  CHECK(check::exact_cover_of(6, *cover));
}

TEST_CASE("Baranyai 1-factorization of K6") {
  // ground set: the 15 2-subsets of {1..6}; seed: one perfect matching;
  // candidates: its Sym(6)-orbit (all 15 matchings); cover: 5 classes
  auto S6 = symmetric_group(6);
  auto G = action_on_pairs(S6);
  CoverInstance inst;
  inst.ground = 15;
  std::vector<Point> matching{Point(pair_index(6, 0, 1)),
                              Point(pair_index(6, 2, 3)),
                              Point(pair_index(6, 4, 5))};
  inst.seeds = {matching};
  inst.group = G;
  auto cover = exact_cover_invariant(inst);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 5);
  CHECK(check::exact_cover_of(15, *cover));
}

TEST_CASE("H-invariant 1-factorization of K6 (round robin)") {
  // H = <(1 2 3 4 5)> fixing 6 permutes the five rotations of {16,25,34}
  auto S6 = symmetric_group(6);
  auto G = action_on_pairs(S6);
  Perm rot5 = cyc(6, {{1, 2, 3, 4, 5}});
  // induced permutation on pairs
  std::vector<Point> img(15);
  for (Point a = 0; a < 6; ++a)
    for (Point b = a + 1; b < 6; ++b) {
      Point x = rot5[a], y = rot5[b];
      if (x > y) std::swap(x, y);
      img[pair_index(6, a, b)] = Point(pair_index(6, x, y));
    }
  Perm h(std::move(img));

  CoverInstance inst;
  inst.ground = 15;
  inst.seeds = {{Point(pair_index(6, 0, 5)), Point(pair_index(6, 1, 4)),
                 Point(pair_index(6, 2, 3))}};
  inst.group = G;
  inst.h_gens = {h};
  auto cover = exact_cover_invariant(inst);
  REQUIRE(cover.has_value());
  CHECK(cover->size() == 5);
  CHECK(check::exact_cover_of(15, *cover));
  // H-invariance: applying h to every part permutes the set of parts
  std::set<std::vector<Point>> parts(cover->begin(), cover->end());
  for (const auto& part : *cover) {
    std::vector<Point> moved;
    for (Point x : part) moved.push_back(h[x]);
    std::sort(moved.begin(), moved.end());
    CHECK(parts.count(moved) == 1);
  }
}

TEST_CASE("infeasible cover is reported absent") {
  // all seeds contain point 0, ground has other points only coverable by
  // overlapping sets
  CoverInstance inst;
  inst.ground = 4;
  inst.seeds = {{0, 1}, {0, 2}, {0, 3}};
  GroupSpec trivial;
  trivial.degree = 4;
  trivial.generators = {Perm::identity(4)};
  inst.group = trivial;
  auto cover = exact_cover_invariant(inst);
  CHECK_FALSE(cover.has_value());
}

TEST_CASE("trivial-H invariant cover agrees with plain exact cover") {
  for (std::uint32_t seed = 300; seed < 340; ++seed) {
    std::size_t ground = 6 + seed % 4;
    auto sets = random_sets(ground, 5 + seed % 7, seed);
    if (sets.empty()) continue;
    CoverInstance inst;
    inst.ground = ground;
    inst.seeds = sets;
    GroupSpec trivial;
    trivial.degree = ground;
    trivial.generators = {Perm::identity(ground)};
    inst.group = trivial;
    auto a = exact_cover_invariant(inst);
    auto b = exact_cover(ground, sets);
    CHECK(a.has_value() == b.has_value());
  }
}

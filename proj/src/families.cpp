#include "synckit/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "synckit/cover.hpp"
#include "synckit/verify.hpp"

namespace synckit {

namespace {

constexpr std::size_t kMaxVertices = 100000;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::string set_label(const std::vector<Point>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

Colouring cover_to_colouring(std::vector<std::vector<Point>> parts) {
  Colouring col;
  col.classes = std::move(parts);
  std::sort(col.classes.begin(), col.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return col;
}

}  // namespace

std::vector<std::vector<Point>> subsets_lex(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(Point(i));
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

GroupSpec symmetric_action_on_sets(
    std::size_t n, const std::vector<std::vector<Point>>& sets) {
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < sets.size(); ++i)
    index.emplace(sets[i], Point(i));
  auto induce = [&](const Perm& g) {
    std::vector<Point> img(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<Point> moved;
      moved.reserve(sets[i].size());
      for (Point x : sets[i]) moved.push_back(g[x]);
      std::sort(moved.begin(), moved.end());
      auto it = index.find(moved);
      if (it == index.end())
        throw PreconditionError("universe not closed under the action");
      img[i] = it->second;
    }
    return Perm(std::move(img));
  };
  std::vector<Point> t(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = Point(i);
    c[i] = Point((i + 1) % n);
  }
  std::swap(t[0], t[1]);
  GroupSpec A;
  A.degree = sets.size();
  A.generators = {induce(Perm(std::move(t))), induce(Perm(std::move(c)))};
  A.name = "Sym(" + std::to_string(n) + ") on sets";
  return A;
}

void verify_family_certificate(const FamilyGraph& fg) {
  if (fg.clique.size() != fg.expected_omega)
    throw Error(fg.family + ": clique size mismatch");
  if (!check::clique(fg.graph, fg.clique))
    throw Error(fg.family + ": clique certificate invalid");
  if (!fg.colouring) throw Error(fg.family + ": missing colouring");
  if (fg.colouring->size() != fg.expected_omega)
    throw Error(fg.family + ": colouring class count mismatch");
  if (!check::proper_colouring(fg.graph, fg.colouring->classes))
    throw Error(fg.family + ": colouring certificate invalid");
}

FamilyGraph hamming(std::size_t d, std::size_t m, const FamilyOptions& opts) {
  if (d < 2 || m < 2)
    throw PreconditionError("hamming requires d > 1 and m > 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= m;
    if (n > kMaxVertices)
      throw PreconditionError("hamming universe exceeds the size guard");
  }
  FamilyGraph fg;
  fg.family = "hamming";
  fg.params = {{"d", long(d)}, {"m", long(m)}};
  fg.expected_omega = m;
  fg.graph = Graph(n);
  // vertex index: first coordinate most significant (lexicographic words)
  std::vector<std::vector<Point>> word(n, std::vector<Point>(d));
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t x = v;
    for (std::size_t i = d; i-- > 0;) {
      word[v][i] = Point(x % m);
      x /= m;
    }
    std::string lbl = "(";
    for (std::size_t i = 0; i < d; ++i)
      lbl += (i ? "," : "") + std::to_string(word[v][i]);
    fg.labels.push_back(lbl + ")");
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t diff = 0;
      for (std::size_t i = 0; i < d; ++i) diff += word[u][i] != word[v][i];
      if (diff == 1) fg.graph.add_edge(Point(u), Point(v));
    }
  if (opts.certify) {
    // clique: zeros in the first d-1 coordinates
    for (std::size_t x = 0; x < m; ++x) fg.clique.push_back(Point(x));
    // colouring: coordinate sum mod m
    std::vector<std::vector<Point>> classes(m);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += word[v][i];
      classes[s % m].push_back(Point(v));
    }
    fg.colouring = cover_to_colouring(std::move(classes));
    verify_family_certificate(fg);
  }
  return fg;
}

FamilyGraph kneser_complement(std::size_t n, std::size_t k,
                              const FamilyOptions& opts) {
  if (!(k > 1 && k < n))
    throw PreconditionError("kneser complement requires 1 < k < n");
  if (n % k != 0)
    throw PreconditionError("kneser complement requires k to divide n");
  if (binomial(n, k) > kMaxVertices)
    throw PreconditionError("kneser universe exceeds the size guard");
  auto sets = subsets_lex(n, k);
  FamilyGraph fg;
  fg.family = "kneser-complement";
  fg.params = {{"n", long(n)}, {"k", long(k)}};
  fg.expected_omega = binomial(n - 1, k - 1);
  fg.graph = Graph(sets.size());
  for (const auto& s : sets) fg.labels.push_back(set_label(s));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      bool meets = false;
      for (Point x : sets[a])
        for (Point y : sets[b])
          if (x == y) meets = true;
      if (meets) fg.graph.add_edge(Point(a), Point(b));
    }
  if (opts.certify) {
    for (std::size_t a = 0; a < sets.size(); ++a)
      if (sets[a][0] == 0) fg.clique.push_back(Point(a));
    // Baranyai classes: cover the k-subsets by perfect partitions
    CoverInstance inst;
    inst.ground = sets.size();
    std::vector<Point> seed;
    for (std::size_t part = 0; part < n / k; ++part) {
      std::vector<Point> block;
      for (std::size_t i = 0; i < k; ++i) block.push_back(Point(part * k + i));
      seed.push_back(Point(std::lower_bound(sets.begin(), sets.end(), block) -
                           sets.begin()));
    }
    inst.seeds = {seed};
    inst.group = symmetric_action_on_sets(n, sets);
    CoverOptions copts;
    copts.max_candidates = opts.max_candidates;
    copts.node_budget = opts.cover_budget;
    auto cover = exact_cover_invariant(inst, copts);
    if (!cover)
      throw Error("kneser-complement: Baranyai cover not found");
    fg.colouring = cover_to_colouring(std::move(*cover));
    verify_family_certificate(fg);
  }
  return fg;
}

FamilyGraph johnson_distance_one(std::size_t n, const FamilyOptions& opts) {
  if (n < 9 || (n % 6 != 1 && n % 6 != 3))
    throw PreconditionError(
        "johnson graph needs n >= 9 with n = 1 or 3 (mod 6): a Steiner "
        "triple system of order n must exist");
  if (binomial(n, 3) > kMaxVertices)
    throw PreconditionError("johnson universe exceeds the size guard");
  auto sets = subsets_lex(n, 3);
  FamilyGraph fg;
  fg.family = "johnson";
  fg.params = {{"n", long(n)}};
  fg.expected_omega = n - 2;
  fg.graph = Graph(sets.size());
  for (const auto& s : sets) fg.labels.push_back(set_label(s));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      std::size_t common = 0;
      for (Point x : sets[a])
        for (Point y : sets[b])
          if (x == y) ++common;
      if (common == 2) fg.graph.add_edge(Point(a), Point(b));
    }
  if (opts.certify) {
    // clique: all triples containing {1,2}
    for (std::size_t a = 0; a < sets.size(); ++a)
      if (sets[a][0] == 0 && sets[a][1] == 1) fg.clique.push_back(Point(a));
    // one maximum coclique is a Steiner triple system: find one, expand its
    // Sym(n)-orbit, and cover
    std::size_t alpha = n * (n - 1) / 6;
    auto seed =
        find_clique_of_size(fg.graph.complement(), alpha, nullptr, nullptr,
                            opts.search);
    if (!seed) throw Error("johnson: no Steiner triple system found");
    CoverInstance inst;
    inst.ground = sets.size();
    inst.seeds = {*seed};
    inst.group = symmetric_action_on_sets(n, sets);
    CoverOptions copts;
    copts.max_candidates = opts.max_candidates;
    copts.node_budget = opts.cover_budget;
    auto cover = exact_cover_invariant(inst, copts);
    if (!cover) throw Error("johnson: resolution cover not found");
    fg.colouring = cover_to_colouring(std::move(*cover));
    verify_family_certificate(fg);
  }
  return fg;
}

FamilyGraph partition_graph(std::size_t n, std::size_t k,
                            const FamilyOptions& opts) {
  if (k < 2) throw PreconditionError("partition graph requires k > 1");
  if (n % k != 0)
    throw PreconditionError("partition graph requires k to divide n");
  if (n / k < 3) throw PreconditionError("partition graph requires n/k > 2");

  // enumerate partitions of {0..n-1} into k-subsets: the smallest unused
  // element always starts the next part, remaining members chosen
  // lexicographically
  auto subsets = subsets_lex(n, k);
  std::map<std::vector<Point>, Point> subset_index;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    subset_index.emplace(subsets[i], Point(i));

  std::vector<std::vector<Point>> partitions;  // as sorted subset indices
  std::vector<Point> parts;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&]() {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first == n) {
      std::vector<Point> sorted(parts);
      std::sort(sorted.begin(), sorted.end());
      partitions.push_back(sorted);
      if (partitions.size() > kMaxVertices)
        throw PreconditionError("partition universe exceeds the size guard");
      return;
    }
    std::vector<Point> block{Point(first)};
    used[first] = true;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (block.size() == k) {
        parts.push_back(subset_index.at(block));
        rec();
        parts.pop_back();
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        if (used[i]) continue;
        used[i] = true;
        block.push_back(Point(i));
        choose(i + 1);
        block.pop_back();
        used[i] = false;
      }
    };
    choose(first + 1);
    used[first] = false;
  };
  rec();

  FamilyGraph fg;
  fg.family = "partition";
  fg.params = {{"n", long(n)}, {"k", long(k)}};
  fg.expected_omega = binomial(n - 1, k - 1);
  fg.graph = Graph(partitions.size());
  for (const auto& pt : partitions) {
    std::string lbl;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      const auto& block = subsets[pt[i]];
      if (i) lbl += "|";
      for (std::size_t j = 0; j < block.size(); ++j)
        lbl += (j ? "," : "") + std::to_string(block[j] + 1);
    }
    fg.labels.push_back("{" + lbl + "}");
  }
  for (std::size_t a = 0; a < partitions.size(); ++a)
    for (std::size_t b = a + 1; b < partitions.size(); ++b) {
      bool share = false;
      for (Point x : partitions[a])
        for (Point y : partitions[b])
          if (x == y) share = true;
      if (!share) fg.graph.add_edge(Point(a), Point(b));
    }

  if (opts.certify) {
    // Cameron colouring: fixed point 1; class of a partition is the part
    // containing it
    std::map<std::vector<Point>, std::vector<Point>> classes;
    for (std::size_t v = 0; v < partitions.size(); ++v) {
      for (Point si : partitions[v]) {
        const auto& block = subsets[si];
        if (block[0] == 0) {
          classes[block].push_back(Point(v));
          break;
        }
      }
    }
    std::vector<std::vector<Point>> cls;
    for (auto& [key, verts] : classes) cls.push_back(verts);
    fg.colouring = cover_to_colouring(std::move(cls));

    // Baranyai clique: partitions pairwise sharing no part that use every
    // k-subset exactly once
    auto cover = exact_cover(subsets.size(), partitions, opts.cover_budget);
    if (!cover) throw Error("partition: Baranyai clique not found");
    for (auto idx : *cover) fg.clique.push_back(Point(idx));
    std::sort(fg.clique.begin(), fg.clique.end());
    verify_family_certificate(fg);
  }
  return fg;
}

std::string labels_to_text(const FamilyGraph& fg) {
  std::ostringstream out;
  for (std::size_t v = 0; v < fg.labels.size(); ++v)
    out << "v " << v + 1 << " " << fg.labels[v] << "\n";
  return out.str();
}

}  // namespace synckit

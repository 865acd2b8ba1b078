#include "synckit/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace synckit {

std::string to_string(OnssType t) {
  switch (t) {
    case OnssType::Affine: return "affine";
    case OnssType::AlmostSimple: return "almost-simple";
    case OnssType::Diagonal: return "diagonal";
    case OnssType::HammingWreath: return "hamming-wreath";
    case OnssType::Unknown: return "unknown";
  }
  return "unknown";
}

OnssType onss_type_from_string(const std::string& s) {
  if (s == "affine") return OnssType::Affine;
  if (s == "almost-simple") return OnssType::AlmostSimple;
  if (s == "diagonal") return OnssType::Diagonal;
  if (s == "hamming-wreath") return OnssType::HammingWreath;
  if (s == "unknown") return OnssType::Unknown;
  throw ParseError("unknown O'Nan-Scott type tag '" + s + "'");
}

GroupSpec GroupSpec::load_grp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path);
  return parse_grp(in, path);
}

GroupSpec GroupSpec::parse_grp(std::istream& in, const std::string& origin) {
  GroupSpec G;
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "degree") {
      long long n = -1;
      if (!(ss >> n) || n <= 0)
        throw ParseError(origin + ": bad degree line", lineno);
      G.degree = std::size_t(n);
      have_degree = true;
    } else if (key == "name") {
      std::string rest;
      std::getline(ss, rest);
      auto pos = rest.find_first_not_of(' ');
      G.name = pos == std::string::npos ? "" : rest.substr(pos);
    } else if (key == "type") {
      std::string t;
      if (!(ss >> t)) throw ParseError(origin + ": bad type line", lineno);
      try {
        G.onss_type = onss_type_from_string(t);
      } catch (const ParseError&) {
        throw ParseError(origin + ": unknown type tag '" + t + "'", lineno);
      }
    } else if (key == "affine") {
      AffineParams ap;
      if (!(ss >> ap.p >> ap.d) || ap.p < 2 || ap.d < 1)
        throw ParseError(origin + ": bad affine line", lineno);
      G.affine = ap;
    } else if (key == "perm") {
      if (!have_degree)
        throw ParseError(origin + ": perm before degree", lineno);
      std::vector<Point> img;
      img.reserve(G.degree);
      long long v;
      while (ss >> v) {
        if (v < 1 || std::size_t(v) > G.degree)
          throw ParseError(origin + ": point out of range", lineno);
        img.push_back(Point(v));
      }
      if (img.size() != G.degree)
        throw ParseError(origin + ": permutation has wrong length", lineno);
      try {
        G.generators.push_back(Perm::from_one_based(img));
      } catch (const Error&) {
        throw ParseError(origin + ": not a permutation", lineno);
      }
    } else {
      throw ParseError(origin + ": unrecognized line '" + key + "'", lineno);
    }
    if (key != "name") {
      ss.clear();
      std::string extra;
      if (ss >> extra)
        throw ParseError(origin + ": trailing tokens on line", lineno);
    }
  }
  if (!have_degree) throw ParseError(origin + ": missing degree line");
  if (G.generators.empty())
    throw ParseError(origin + ": no generators");
  if (G.affine) {
    std::size_t n = 1;
    for (std::uint32_t i = 0; i < G.affine->d; ++i) n *= G.affine->p;
    if (n != G.degree)
      throw ParseError(origin + ": affine parameters do not match degree");
  }
  return G;
}

void GroupSpec::save_grp(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write group file " + path);
  out << "degree " << degree << "\n";
  if (!name.empty()) out << "name " << name << "\n";
  if (onss_type != OnssType::Unknown)
    out << "type " << to_string(onss_type) << "\n";
  if (affine) out << "affine " << affine->p << " " << affine->d << "\n";
  for (const Perm& g : generators) out << "perm " << g.to_string() << "\n";
}

std::vector<std::vector<Point>> point_orbits(const std::vector<Perm>& gens,
                                             std::size_t n) {
  std::vector<std::vector<Point>> orbits;
  std::vector<bool> seen(n, false);
  for (Point s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orb{s};
    seen[s] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens) {
        Point q = g[orb[i]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

bool is_transitive(const GroupSpec& G) {
  return point_orbits(G.generators, G.degree).size() == 1;
}

BigInt group_order(const GroupSpec& G) {
  return StabChain(G.degree, G.generators).order();
}

std::pair<Point, Point> pair_from_index(std::size_t n, std::size_t id) {
  // invert the upper-triangle indexing by scanning rows
  for (Point a = 0; a + 1 < n; ++a) {
    std::size_t row = n - 1 - a;
    if (id < row) return {a, Point(a + 1 + id)};
    id -= row;
  }
  throw PreconditionError("pair index out of range");
}

PairOrbits orbits_on_2subsets(const GroupSpec& G) {
  if (!is_transitive(G))
    throw PreconditionError("group is not transitive");
  const std::size_t n = G.degree;
  const std::size_t total = n * (n - 1) / 2;
  PairOrbits po;
  po.n = n;
  po.orbit_of.assign(total, UINT32_MAX);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < total; ++start) {
    if (po.orbit_of[start] != UINT32_MAX) continue;
    const auto oid = std::uint32_t(po.reps.size());
    po.reps.push_back(pair_from_index(n, start));
    std::size_t size = 0;
    stack.assign(1, start);
    po.orbit_of[start] = oid;
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      ++size;
      auto [a, b] = pair_from_index(n, id);
      for (const Perm& g : G.generators) {
        Point x = g[a], y = g[b];
        if (x > y) std::swap(x, y);
        std::size_t jd = pair_index(n, x, y);
        if (po.orbit_of[jd] == UINT32_MAX) {
          po.orbit_of[jd] = oid;
          stack.push_back(jd);
        }
      }
    }
    po.sizes.push_back(size);
    po.orbit_degree.push_back(2 * size / n);
  }
  po.m = po.reps.size();
  return po;
}

bool is_2set_transitive(const GroupSpec& G) {
  return orbits_on_2subsets(G).m == 1;
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

bool is_primitive(const GroupSpec& G) {
  if (!is_transitive(G))
    throw PreconditionError("group is not transitive");
  const std::size_t n = G.degree;
  if (n == 1) return true;
  for (Point beta = 1; beta < n; ++beta) {
    // minimal block system in which 0 and beta share a block
    UnionFind uf(n);
    std::vector<std::pair<Point, Point>> queue{{0, beta}};
    uf.unite(0, beta);
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const Perm& g : G.generators) {
        Point x = g[a], y = g[b];
        if (uf.unite(x, y)) queue.emplace_back(x, y);
      }
    }
    std::size_t block_size = 0;
    Point root = uf.find(0);
    for (Point x = 0; x < n; ++x)
      if (uf.find(x) == root) ++block_size;
    if (block_size != n) return false;  // non-trivial block found
  }
  return true;
}

GroupSpec stabilizer(const GroupSpec& G, Point x) {
  if (x >= G.degree) throw PreconditionError("stabilizer point out of range");
  StabChain chain(G.degree, G.generators, {x});
  std::vector<Perm> gens = chain.stabilizer_generators(1);
  if (gens.empty()) gens.push_back(Perm::identity(G.degree));
  GroupSpec H;
  H.degree = G.degree;
  H.generators = std::move(gens);
  H.name = G.name.empty() ? "" : G.name + "_stab";
  return H;
}

namespace {

// Canonical representative of the coset H*g: minimize the images of the base
// points of H level by level.
Perm coset_canonical(const StabChain& h_chain, const Perm& g) {
  Perm w = g;
  for (std::size_t lvl = 0; lvl < h_chain.depth(); ++lvl) {
    const auto& orbit = h_chain.level_orbit(lvl);
    Point best_q = orbit[0];
    Point best_img = w[orbit[0]];
    for (Point q : orbit)
      if (w[q] < best_img) {
        best_img = w[q];
        best_q = q;
      }
    if (best_q != h_chain.base_point(lvl))
      w = h_chain.transversal(lvl, best_q) * w;
  }
  return w;
}

}  // namespace

GroupSpec coset_action(const GroupSpec& G, const std::vector<Perm>& h_gens,
                       std::size_t max_index) {
  StabChain g_chain(G.degree, G.generators);
  for (const Perm& h : h_gens)
    if (!g_chain.contains(h))
      throw PreconditionError("H is not a subgroup of G");
  StabChain h_chain(G.degree, h_gens);

  std::map<std::vector<Point>, std::uint32_t> index;
  std::vector<Perm> reps;
  Perm start = coset_canonical(h_chain, Perm::identity(G.degree));
  index.emplace(start.images(), 0);
  reps.push_back(start);
  std::vector<std::vector<Point>> images(G.generators.size());

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = 0; k < G.generators.size(); ++k) {
      Perm t = coset_canonical(h_chain, reps[i] * G.generators[k]);
      auto [it, inserted] = index.emplace(t.images(), std::uint32_t(reps.size()));
      if (inserted) {
        reps.push_back(t);
        if (reps.size() > max_index)
          throw ResourceError("coset index exceeds bound " +
                              std::to_string(max_index));
      }
      images[k].push_back(it->second);
    }
  }

  GroupSpec A;
  A.degree = reps.size();
  for (std::size_t k = 0; k < G.generators.size(); ++k)
    A.generators.push_back(Perm(std::vector<Point>(images[k])));
  A.name = G.name;
  return A;
}

std::vector<std::uint32_t> affine_vector_of_point(Point i, std::uint32_t p,
                                                  std::uint32_t d) {
  std::vector<std::uint32_t> v(d);
  for (std::uint32_t k = 0; k < d; ++k) {
    v[k] = i % p;
    i /= p;
  }
  return v;
}

Point affine_point_of_vector(const std::vector<std::uint32_t>& v,
                             std::uint32_t p) {
  Point i = 0;
  for (std::size_t k = v.size(); k-- > 0;) i = i * p + (v[k] % p);
  return i;
}

Perm translation_perm(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < v.size(); ++k) n *= p;
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) {
    auto w = affine_vector_of_point(x, p, std::uint32_t(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = (w[k] + v[k]) % p;
    img[x] = affine_point_of_vector(w, p);
  }
  return Perm(std::move(img));
}

void validate_affine(const GroupSpec& G, const StabChain& chain) {
  if (!G.affine) throw PreconditionError("group has no affine parameters");
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < G.affine->d; ++i) n *= G.affine->p;
  if (n != G.degree)
    throw PreconditionError("affine parameters do not match degree");
  // basis translations generate the full translation subgroup
  for (std::uint32_t k = 0; k < G.affine->d; ++k) {
    std::vector<std::uint32_t> e(G.affine->d, 0);
    e[k] = 1;
    if (!chain.contains(translation_perm(e, G.affine->p)))
      throw PreconditionError(
          "affine invariant fails: basis translation not in group");
  }
}

}  // namespace synckit

#include "synckit/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "synckit/cover.hpp"
#include "synckit/spectral.hpp"
#include "synckit/verify.hpp"

namespace synckit {

std::string to_string(Status s) {
  switch (s) {
    case Status::Separating: return "separating";
    case Status::NonSeparatingSynchronizing:
      return "non-separating-synchronizing";
    case Status::NonSynchronizing: return "non-synchronizing";
    case Status::Unknown: return "unknown";
    case Status::Imprimitive: return "imprimitive";
  }
  return "unknown";
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string mask_to_text(std::uint64_t mask, std::size_t m) {
  std::string s;
  for (std::size_t i = 0; i < m; ++i)
    if (mask >> i & 1) s += (s.empty() ? "" : "+") + std::to_string(i + 1);
  return s;
}

// canonical vectors (first non-zero digit 1) for the 1-dimensional
// subspaces of GF(p)^d, in lexicographic order
std::vector<std::vector<std::uint32_t>> one_dim_subspaces(std::uint32_t p,
                                                          std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> reps;
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= p;
  for (std::size_t code = 1; code < total; ++code) {
    auto v = affine_vector_of_point(Point(code), p, d);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;  // not normalized
    reps.push_back(v);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::uint32_t dot_mod_p(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b, std::uint32_t p) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % p;
  return s;
}

}  // namespace

AffineOutcome affine_tests(const GroupSpec& G, const StabChain& chain) {
  if (!G.affine) throw PreconditionError("group has no affine parameters");
  validate_affine(G, chain);
  const std::uint32_t p = G.affine->p;
  const std::uint32_t d = G.affine->d;
  const std::size_t n = G.degree;

  // H: stabilizer of the zero vector, which is point 1
  StabChain zero_chain(G.degree, G.generators, {0});
  std::vector<Perm> h_gens = zero_chain.stabilizer_generators(1);
  if (h_gens.empty()) h_gens.push_back(Perm::identity(n));

  auto lines = one_dim_subspaces(p, d);
  // index lines by the point of their canonical representative vector
  std::map<Point, std::size_t> line_of_rep;
  for (std::size_t i = 0; i < lines.size(); ++i)
    line_of_rep[affine_point_of_vector(lines[i], p)] = i;

  // H-action on lines through the representative points
  auto line_image = [&](const Perm& g, std::size_t li) {
    Point img = g[affine_point_of_vector(lines[li], p)];
    auto v = affine_vector_of_point(img, p, d);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    // normalize: scale so the leading digit is 1
    std::uint32_t inv = 1;
    for (std::uint32_t t = 1; t < p; ++t)
      if (t * v[lead] % p == 1) inv = t;
    for (auto& c : v) c = c * inv % p;
    return line_of_rep.at(affine_point_of_vector(v, p));
  };

  // orbits of H on the lines
  std::vector<std::int32_t> orbit_of(lines.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t s = 0; s < lines.size(); ++s) {
    if (orbit_of[s] >= 0) continue;
    std::vector<std::size_t> orb{s};
    orbit_of[s] = std::int32_t(orbits.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : h_gens) {
        std::size_t t = line_image(g, orb[i]);
        if (orbit_of[t] < 0) {
          orbit_of[t] = std::int32_t(orbits.size());
          orb.push_back(t);
        }
      }
    orbits.push_back(std::move(orb));
  }

  AffineOutcome out;
  if (orbits.size() == 1) {
    out.kind = AffineOutcome::Kind::Separating;
    out.note = "zero stabilizer transitive on the " +
               std::to_string(lines.size()) + " one-dimensional subspaces";
    return out;
  }

  // hyperplanes as normalized covectors; W avoids orbit O when no line of O
  // lies inside W
  auto covectors = one_dim_subspaces(p, d);
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    for (const auto& w : covectors) {
      bool avoids = true;
      for (std::size_t li : orbits[oi])
        if (dot_mod_p(w, lines[li], p) == 0) {
          avoids = false;
          break;
        }
      if (!avoids) continue;

      // Theorem witness: edges join points differing by a vector lying on a
      // line of the orbit; colour classes are the cosets of W
      out.kind = AffineOutcome::Kind::NonSynchronizing;
      std::vector<bool> direction(n, false);
      for (std::size_t li : orbits[oi])
        for (std::uint32_t lam = 1; lam < p; ++lam) {
          std::vector<std::uint32_t> v(d);
          for (std::uint32_t i = 0; i < d; ++i)
            v[i] = lines[li][i] * lam % p;
          direction[affine_point_of_vector(v, p)] = true;
        }
      out.graph = Graph(n);
      for (Point a = 0; a < n; ++a) {
        auto va = affine_vector_of_point(a, p, d);
        for (Point b = a + 1; b < n; ++b) {
          auto vb = affine_vector_of_point(b, p, d);
          std::vector<std::uint32_t> diff(d);
          for (std::uint32_t i = 0; i < d; ++i)
            diff[i] = (va[i] + p - vb[i]) % p;
          if (direction[affine_point_of_vector(diff, p)])
            out.graph.add_edge(a, b);
        }
      }
      // clique: the first line of the orbit (as a point set, including 0)
      out.clique.push_back(0);
      for (std::uint32_t lam = 1; lam < p; ++lam) {
        std::vector<std::uint32_t> v(d);
        for (std::uint32_t i = 0; i < d; ++i)
          v[i] = lines[orbits[oi][0]][i] * lam % p;
        out.clique.push_back(affine_point_of_vector(v, p));
      }
      std::sort(out.clique.begin(), out.clique.end());
      // colouring: cosets of W = kernel of the covector
      std::vector<std::vector<Point>> classes(p);
      for (Point x = 0; x < n; ++x)
        classes[dot_mod_p(w, affine_vector_of_point(x, p, d), p)].push_back(x);
      std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return a.front() < b.front();
      });
      out.colouring.classes = std::move(classes);
      out.note = "hyperplane " + std::to_string(affine_point_of_vector(w, p) + 1) +
                 " avoids line-orbit " + std::to_string(oi + 1);
      if (!check::clique(out.graph, out.clique) ||
          !check::proper_colouring(out.graph, out.colouring.classes))
        throw Error("internal: affine witness failed verification");
      return out;
    }
  }
  out.kind = AffineOutcome::Kind::Inconclusive;
  out.note = "every hyperplane meets every line-orbit and the zero "
             "stabilizer is intransitive on lines";
  return out;
}

namespace {

struct PairInfo {
  std::uint64_t mask = 0, cmask = 0;
  std::size_t deg = 0, cdeg = 0;
  std::optional<std::size_t> omega;       // of the lower-degree graph
  std::vector<Point> gamma_clique;        // max clique of that graph
  std::vector<Point> cobar_clique;        // n/omega clique found in the complement
  enum class State { SeparatingOk, NonSeparating, Undecided } state =
      State::Undecided;
  std::string note;
};

class Classifier {
public:
  Classifier(const GroupSpec& G, NonSyncLibrary& lib, const Config& cfg)
      : G_(G), lib_(lib), cfg_(cfg) {
    limits_.node_budget = cfg.node_budget;
    limits_.workers = cfg.threads;
    limits_.split_depth = cfg.split_depth;
    iso_opts_.node_budget = cfg.iso_node_budget;
  }

  ClassificationReport run() {
    auto t0 = std::chrono::steady_clock::now();
    ClassificationReport rep = run_inner();
    rep.total_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return rep;
  }

private:
  ClassificationReport run_inner();
  void build_orbit_rows();
  Graph graph_for_mask(std::uint64_t mask) const;
  std::size_t mask_degree(std::uint64_t mask) const;
  std::optional<std::uint64_t> mask_of_graph(const Graph& g) const;
  bool library_lookup(ClassificationReport& rep);
  void pair_sweep(ClassificationReport& rep, std::vector<PairInfo>& pairs);
  bool colouring_search(ClassificationReport& rep,
                        const std::vector<PairInfo>& pairs,
                        bool& all_refuted);
  std::optional<Perm> element_of_order(std::uint64_t k,
                                       std::vector<std::string>& notes) const;
  std::vector<Perm> elements_of_order_subgroups(
      std::uint64_t k, std::size_t cap, std::vector<std::string>& notes) const;

  const GroupSpec& G_;
  NonSyncLibrary& lib_;
  const Config& cfg_;
  SearchLimits limits_;
  IsoOptions iso_opts_;
  PairOrbits po_;
  std::vector<std::vector<Bitset>> orbit_rows_;
  std::optional<StabChain> chain_;
};

void Classifier::build_orbit_rows() {
  orbit_rows_.clear();
  for (std::size_t i = 0; i < po_.m; ++i)
    orbit_rows_.push_back(orbital_rows(po_, i));
}

Graph Classifier::graph_for_mask(std::uint64_t mask) const {
  Graph g(po_.n);
  Bitset row(po_.n);
  for (Point v = 0; v < po_.n; ++v) {
    row.clear();
    for (std::size_t i = 0; i < po_.m; ++i)
      if (mask >> i & 1) row |= orbit_rows_[i][v];
    row.for_each([&](std::size_t u) {
      if (u > v) g.add_edge(v, Point(u));
    });
  }
  return g;
}

std::size_t Classifier::mask_degree(std::uint64_t mask) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < po_.m; ++i)
    if (mask >> i & 1) d += po_.orbit_degree[i];
  return d;
}

std::optional<std::uint64_t> Classifier::mask_of_graph(const Graph& g) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < po_.m; ++i) {
    auto [a, b] = po_.reps[i];
    if (g.has_edge(a, b)) mask |= std::uint64_t(1) << i;
  }
  if (graph_for_mask(mask) == g) return mask;
  return std::nullopt;
}

bool Classifier::library_lookup(ClassificationReport& rep) {
  const std::size_t n = G_.degree;
  if (po_.m >= 63) return false;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << po_.m); ++mask) {
    std::size_t deg = mask_degree(mask);
    bool candidate = false;
    for (const auto& e : lib_.entries())
      if (e.graph.order() == n && e.graph.edge_count() == deg * n / 2) {
        candidate = true;
        break;
      }
    if (!candidate) continue;
    Graph g = graph_for_mask(mask);
    auto match = lib_.find_isomorphic(g, iso_opts_);
    if (!match) continue;
    const auto& entry = lib_.entries()[match->entry];
    // transport the certificate through the isomorphism
    Witness w;
    w.mask = mask;
    w.omega = entry.omega;
    w.alpha = n / entry.omega;
    for (Point v : entry.clique) w.clique.push_back(match->mapping[v]);
    std::sort(w.clique.begin(), w.clique.end());
    Colouring col;
    for (const auto& cl : entry.colouring.classes) {
      std::vector<Point> c;
      for (Point v : cl) c.push_back(match->mapping[v]);
      std::sort(c.begin(), c.end());
      col.classes.push_back(std::move(c));
    }
    std::sort(col.classes.begin(), col.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (!check::clique(g, w.clique) ||
        !check::proper_colouring(g, col.classes) ||
        w.clique.size() != col.classes.size())
      throw Error("internal: transported certificate failed verification");
    w.colouring = std::move(col);
    w.graph = std::move(g);
    rep.status = Status::NonSynchronizing;
    rep.rule = "library-isomorphism";
    rep.witness = std::move(w);
    rep.notes.push_back("matched library entry: " + entry.provenance);
    return true;
  }
  return false;
}

void Classifier::pair_sweep(ClassificationReport& rep,
                            std::vector<PairInfo>& pairs) {
  const std::size_t n = G_.degree;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << po_.m); ++mask) {
    std::uint64_t cmask = ((std::uint64_t(1) << po_.m) - 1) & ~mask;
    std::size_t deg = mask_degree(mask), cdeg = mask_degree(cmask);
    if (deg > cdeg || (deg == cdeg && mask > cmask)) continue;
    pairs.push_back(PairInfo{mask, cmask, deg, cdeg, {}, {}, {},
                             PairInfo::State::Undecided, ""});
  }
  long hint = -1;
  if (auto it = cfg_.hints.find(G_.name); it != cfg_.hints.end())
    hint = it->second;
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const PairInfo& a, const PairInfo& b) {
                     auto hit = [&](const PairInfo& p) {
                       return long(p.deg) == hint || long(p.cdeg) == hint;
                     };
                     if (hit(a) != hit(b)) return hit(a);
                     if (a.deg != b.deg) return a.deg < b.deg;
                     return a.mask < b.mask;
                   });

  for (PairInfo& pair : pairs) {
    Graph gamma = graph_for_mask(pair.mask);
    try {
      auto mc = max_clique(gamma, &G_, limits_);
      pair.omega = mc.omega;
      pair.gamma_clique = mc.witness;
      if (n % mc.omega != 0) {
        pair.state = PairInfo::State::SeparatingOk;
        pair.note = "omega does not divide n";
        continue;
      }
      std::size_t target = n / mc.omega;
      auto bound = hoffman_coclique_bound(gamma);
      if (std::size_t(bound.floor_guarded) < target) {
        pair.state = PairInfo::State::SeparatingOk;
        pair.note = "Hoffman bound " + std::to_string(bound.floor_guarded) +
                    " below " + std::to_string(target);
        continue;
      }
      Graph cobar = graph_for_mask(pair.cmask);
      std::optional<std::vector<Point>> found;
      // a configured fixing subgroup can find the clique cheaply; absence
      // under it proves nothing, so fall through to the full search
      for (const Strategy& st : cfg_.strategies) {
        if (st.kind != Strategy::Kind::FixClique) continue;
        auto g = element_of_order(st.order, rep.notes);
        if (!g) continue;
        std::vector<Perm> fix{*g};
        found = find_clique_of_size(cobar, target, nullptr, &fix, limits_);
        if (found) {
          pair.note = "clique found under fix-clique:" + std::to_string(st.order);
          break;
        }
      }
      if (!found)
        found = find_clique_of_size(cobar, target, &G_, nullptr, limits_);
      if (found) {
        pair.state = PairInfo::State::NonSeparating;
        pair.cobar_clique = *found;
      } else {
        pair.state = PairInfo::State::SeparatingOk;
        if (pair.note.empty())
          pair.note = "no coclique of size " + std::to_string(target);
      }
    } catch (const ResourceError& e) {
      pair.state = PairInfo::State::Undecided;
      pair.note = std::string("resource: ") + e.what();
    }
  }
  for (const PairInfo& pair : pairs) {
    std::ostringstream note;
    note << "pair orbits{" << mask_to_text(pair.mask, po_.m) << "} deg "
         << pair.deg << "/" << pair.cdeg;
    if (pair.omega) note << " omega " << *pair.omega;
    switch (pair.state) {
      case PairInfo::State::SeparatingOk: note << " separating"; break;
      case PairInfo::State::NonSeparating: note << " non-separating"; break;
      case PairInfo::State::Undecided: note << " undecided"; break;
    }
    if (!pair.note.empty()) note << " (" << pair.note << ")";
    rep.notes.push_back(note.str());
  }
}

std::optional<Perm> Classifier::element_of_order(
    std::uint64_t k, std::vector<std::string>& notes) const {
  std::optional<Perm> found;
  try {
    chain_->for_each_element(
        [&](const Perm& g) {
          if (!found && g.order() == k) found = g;
        },
        cfg_.element_enumeration_limit);
  } catch (const ResourceError&) {
    notes.push_back("element enumeration limit reached while looking for "
                    "order " + std::to_string(k));
  }
  return found;
}

std::vector<Perm> Classifier::elements_of_order_subgroups(
    std::uint64_t k, std::size_t cap, std::vector<std::string>& notes) const {
  // one generator per distinct cyclic subgroup of order k
  std::vector<Perm> gens;
  std::set<std::vector<std::vector<Point>>> seen;
  bool truncated = false;
  try {
    chain_->for_each_element(
        [&](const Perm& g) {
          if (g.order() != k) return;
          if (gens.size() >= cap) {
            truncated = true;
            return;
          }
          std::vector<std::vector<Point>> subgroup;
          Perm x = g;
          for (std::uint64_t i = 1; i < k; ++i) {
            subgroup.push_back(x.images());
            x = x * g;
          }
          std::sort(subgroup.begin(), subgroup.end());
          if (seen.insert(subgroup).second) gens.push_back(g);
        },
        cfg_.element_enumeration_limit);
  } catch (const ResourceError&) {
    notes.push_back("element enumeration limit reached while collecting "
                    "order-" + std::to_string(k) + " subgroups");
  }
  if (truncated)
    notes.push_back("cyclic subgroup sweep truncated at " +
                    std::to_string(cap));
  return gens;
}

bool Classifier::colouring_search(ClassificationReport& rep,
                                  const std::vector<PairInfo>& pairs,
                                  bool& all_refuted) {
  const std::size_t n = G_.degree;
  struct Target {
    std::uint64_t mask;
    std::size_t deg;
    std::size_t omega, alpha;
    std::vector<Point> clique;
  };
  std::vector<Target> targets;
  for (const PairInfo& pair : pairs) {
    if (pair.state != PairInfo::State::NonSeparating) continue;
    std::size_t w = *pair.omega;
    targets.push_back(
        Target{pair.mask, pair.deg, w, n / w, pair.gamma_clique});
    targets.push_back(
        Target{pair.cmask, pair.cdeg, n / w, w, pair.cobar_clique});
  }
  long hint = -1;
  if (auto it = cfg_.hints.find(G_.name); it != cfg_.hints.end())
    hint = it->second;
  std::stable_sort(targets.begin(), targets.end(),
                   [&](const Target& a, const Target& b) {
                     bool ha = long(a.deg) == hint, hb = long(b.deg) == hint;
                     if (ha != hb) return ha;
                     if (a.deg != b.deg) return a.deg < b.deg;
                     return a.mask < b.mask;
                   });

  all_refuted = true;
  for (const Target& t : targets) {
    Graph delta = graph_for_mask(t.mask);
    Graph partner = graph_for_mask(((std::uint64_t(1) << po_.m) - 1) & ~t.mask);
    bool refuted = false;
    std::optional<Colouring> cert;
    std::string how;

    // any omega-colouring of a graph with omega*alpha = n has classes of
    // size exactly alpha, so colourings are exact covers by maximum
    // cocliques (cliques of the complementary graph)
    std::optional<std::vector<std::vector<Point>>> cocliques;
    try {
      cocliques = enumerate_cliques_of_size(partner, t.alpha,
                                            cfg_.max_candidates, limits_);
    } catch (const ResourceError& e) {
      rep.notes.push_back("orbits{" + mask_to_text(t.mask, po_.m) +
                          "}: coclique enumeration " + e.what());
    }

    for (const Strategy& st : cfg_.strategies) {
      if (cert) break;
      try {
        switch (st.kind) {
          case Strategy::Kind::PlainCover: {
            if (!cocliques) break;
            auto cover = exact_cover(n, *cocliques, cfg_.node_budget);
            if (cover) {
              Colouring col;
              for (auto i : *cover) col.classes.push_back((*cocliques)[i]);
              std::sort(col.classes.begin(), col.classes.end(),
                        [](const auto& a, const auto& b) {
                          return a.front() < b.front();
                        });
              cert = std::move(col);
              how = "plain-cover";
            } else {
              refuted = true;  // candidates are complete, so absence refutes
            }
            break;
          }
          case Strategy::Kind::HCover: {
            if (!cocliques) break;
            auto g = element_of_order(st.order, rep.notes);
            if (!g) break;
            CoverInstance inst;
            inst.ground = n;
            inst.seeds = *cocliques;
            inst.group = G_;
            inst.h_gens = {*g};
            CoverOptions copts;
            copts.max_candidates = cfg_.max_candidates;
            copts.node_budget = cfg_.node_budget;
            auto cover = exact_cover_invariant(inst, copts);
            if (cover) {
              Colouring col;
              col.classes = std::move(*cover);
              cert = std::move(col);
              how = st.to_string();
            }
            break;
          }
          case Strategy::Kind::KClasswise: {
            auto reps = elements_of_order_subgroups(st.order, 64, rep.notes);
            ColouringOptions copts;
            copts.node_budget = cfg_.node_budget;
            copts.max_class_size = t.alpha;
            for (const Perm& g : reps) {
              auto col = classwise_invariant_colouring(delta, {g}, t.omega,
                                                       copts);
              if (col) {
                cert = std::move(*col);
                how = st.to_string();
                break;
              }
            }
            break;
          }
          case Strategy::Kind::FixClique:
            break;  // pair-sweep strategy only
        }
      } catch (const ResourceError& e) {
        rep.notes.push_back("orbits{" + mask_to_text(t.mask, po_.m) + "} " +
                            st.to_string() + ": " + e.what());
      }
    }

    if (cert) {
      if (cert->size() != t.omega ||
          !check::proper_colouring(delta, cert->classes) ||
          !check::clique(delta, t.clique) || t.clique.size() != t.omega ||
          !check::invariant(delta, G_.generators))
        throw Error("internal: colouring certificate failed verification");
      Witness w;
      w.mask = t.mask;
      w.omega = t.omega;
      w.alpha = t.alpha;
      w.clique = t.clique;
      w.colouring = *cert;
      w.graph = delta;
      rep.witness = std::move(w);
      rep.status = Status::NonSynchronizing;
      rep.rule = "colouring-certificate";
      rep.notes.push_back("orbits{" + mask_to_text(t.mask, po_.m) +
                          "} deg " + std::to_string(t.deg) +
                          ": omega-colouring found via " + how);
      NonSyncLibrary::Entry entry;
      entry.graph = delta;
      entry.provenance = G_.name + " orbits{" + mask_to_text(t.mask, po_.m) +
                         "} degree " + std::to_string(G_.degree);
      entry.omega = t.omega;
      entry.clique = t.clique;
      entry.colouring = *cert;
      lib_.add(std::move(entry));
      return true;
    }
    if (!refuted) {
      all_refuted = false;
      rep.notes.push_back("orbits{" + mask_to_text(t.mask, po_.m) +
                          "} deg " + std::to_string(t.deg) +
                          ": chi = omega undecided");
    } else {
      rep.notes.push_back("orbits{" + mask_to_text(t.mask, po_.m) + "} deg " +
                          std::to_string(t.deg) + ": no omega-colouring");
    }
  }
  return false;
}

ClassificationReport Classifier::run_inner() {
  ClassificationReport rep;
  rep.name = G_.name;
  rep.degree = G_.degree;
  const std::size_t n = G_.degree;

  if (!is_transitive(G_))
    throw PreconditionError("classification requires a transitive group");
  chain_.emplace(G_.degree, G_.generators);
  rep.order = chain_->order();

  if (!is_primitive(G_)) {
    rep.status = Status::Imprimitive;
    rep.rule = "imprimitivity";
    rep.notes.push_back(
        "input preserves a non-trivial partition; synchronizing groups are "
        "primitive, so the classification does not apply");
    return rep;
  }

  if (is_prime(n)) {
    rep.status = Status::Separating;
    rep.rule = "prime-degree";
    return rep;
  }

  po_ = orbits_on_2subsets(G_);
  if (po_.m == 1) {
    rep.status = Status::Separating;
    rep.rule = "2-set-transitive";
    return rep;
  }

  if (G_.affine && (G_.affine->d == 2 || G_.affine->d == 3)) {
    auto out = affine_tests(G_, *chain_);
    if (out.kind == AffineOutcome::Kind::Separating) {
      rep.status = Status::Separating;
      rep.rule = "affine-test-1";
      rep.notes.push_back(out.note);
      return rep;
    }
    if (out.kind == AffineOutcome::Kind::NonSynchronizing) {
      build_orbit_rows();
      Witness w;
      w.mask = mask_of_graph(out.graph);
      if (!w.mask)
        throw Error("internal: affine witness graph is not a union of orbits");
      w.omega = out.clique.size();
      w.alpha = n / out.clique.size();
      w.clique = out.clique;
      w.colouring = out.colouring;
      w.graph = out.graph;
      rep.status = Status::NonSynchronizing;
      rep.rule = "affine-test-2";
      rep.witness = std::move(w);
      rep.notes.push_back(out.note);
      return rep;
    }
    rep.notes.push_back("affine tests inconclusive: " + out.note);
  }

  if (po_.m > cfg_.max_orbit_count) {
    rep.status = Status::Unknown;
    rep.rule = "orbital-explosion";
    rep.notes.push_back(std::to_string(po_.m) +
                        " pair-orbits exceed the configured bound");
    return rep;
  }
  build_orbit_rows();

  if (library_lookup(rep)) return rep;

  std::vector<PairInfo> pairs;
  pair_sweep(rep, pairs);

  std::vector<const PairInfo*> nonseparating;
  bool all_conclusive = true;
  for (const PairInfo& p : pairs) {
    if (p.state == PairInfo::State::NonSeparating) nonseparating.push_back(&p);
    if (p.state == PairInfo::State::Undecided) all_conclusive = false;
  }

  if (nonseparating.empty()) {
    if (all_conclusive) {
      rep.status = Status::Separating;
      rep.rule = "pair-sweep";
    } else {
      rep.status = Status::Unknown;
      rep.rule = "pair-sweep-incomplete";
    }
    return rep;
  }

  // base witness: the first non-separating pair
  {
    const PairInfo& p = *nonseparating.front();
    Witness w;
    w.mask = p.mask;
    w.omega = *p.omega;
    w.alpha = n / *p.omega;
    w.clique = p.gamma_clique;
    w.coclique = p.cobar_clique;
    rep.witness = std::move(w);
  }

  bool theorem2 = G_.onss_type == OnssType::Affine ||
                  G_.onss_type == OnssType::Diagonal ||
                  G_.onss_type == OnssType::HammingWreath;

  bool all_refuted = false;
  bool certified = colouring_search(rep, pairs, all_refuted);
  if (certified) return rep;

  if (theorem2) {
    // synchronizing iff separating for non-almost-simple primitive groups
    rep.status = Status::NonSynchronizing;
    rep.rule = "theorem-2-non-almost-simple";
    rep.notes.push_back(
        "non-separating with O'Nan-Scott type " + to_string(G_.onss_type) +
        "; no explicit colouring certificate was found within budget");
    return rep;
  }

  if (all_refuted) {
    if (G_.onss_type == OnssType::AlmostSimple) {
      rep.status = Status::NonSeparatingSynchronizing;
      rep.rule = "colouring-exhausted";
      return rep;
    }
    rep.status = Status::Unknown;
    rep.rule = "type-unknown";
    rep.notes.push_back(
        "non-separating; every orbital graph fails chi = omega, but the "
        "O'Nan-Scott type is unknown, so synchronization is undecided");
    return rep;
  }

  rep.status = Status::Unknown;
  rep.rule = "colouring-incomplete";
  return rep;
}

}  // namespace

ClassificationReport classify(const GroupSpec& G, NonSyncLibrary& lib,
                              const Config& cfg) {
  Classifier c(G, lib, cfg);
  return c.run();
}

BatchResult batch(const std::vector<GroupSpec>& groups, NonSyncLibrary& lib,
                  const Config& cfg) {
  struct Item {
    const GroupSpec* g;
    BigInt order;
  };
  std::vector<Item> items;
  for (const GroupSpec& g : groups) items.push_back(Item{&g, group_order(g)});
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.g->degree != b.g->degree) return a.g->degree < b.g->degree;
    if (a.order != b.order) return a.order > b.order;
    return a.g->name < b.g->name;
  });

  BatchResult out;
  std::ostringstream t3, t4;
  t3 << "n,name,deg,omega\n";
  t4 << "n,name,status\n";
  for (const Item& item : items) {
    ClassificationReport rep;
    try {
      rep = classify(*item.g, lib, cfg);
    } catch (const Error& e) {
      rep.name = item.g->name;
      rep.degree = item.g->degree;
      rep.order = item.order;
      rep.status = Status::Unknown;
      rep.rule = "error";
      rep.notes.push_back(e.what());
    }
    if (rep.status == Status::NonSynchronizing && rep.witness.graph) {
      t3 << rep.degree << "," << rep.name << ","
         << rep.witness.graph->regular_degree() << "," << *rep.witness.omega
         << "\n";
    }
    t4 << rep.degree << "," << rep.name << "," << to_string(rep.status) << "\n";
    out.reports.push_back(std::move(rep));
  }
  out.table3_csv = t3.str();
  out.table4_csv = t4.str();
  return out;
}

}  // namespace synckit

#include "synckit/geometry.hpp"

#include <algorithm>
#include <map>

#include "synckit/cover.hpp"
#include "synckit/verify.hpp"

namespace synckit {

namespace {

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Colouring parts_to_colouring(std::vector<std::vector<Point>> parts) {
  Colouring col;
  col.classes = std::move(parts);
  std::sort(col.classes.begin(), col.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return col;
}

// cover the vertex set by maximum cocliques of the given size
Colouring coclique_cover_colouring(const Graph& g, std::size_t coclique_size,
                                   const std::string& what,
                                   const FamilyOptions& opts) {
  auto cocliques = enumerate_cliques_of_size(g.complement(), coclique_size,
                                             opts.max_candidates, opts.search);
  auto cover = exact_cover(g.order(), cocliques, opts.cover_budget);
  if (!cover) throw Error(what + ": no partition into maximum cocliques");
  std::vector<std::vector<Point>> parts;
  for (auto i : *cover) parts.push_back(cocliques[i]);
  return parts_to_colouring(std::move(parts));
}

}  // namespace

ProjectiveSpace ProjectiveSpace::make(std::uint32_t q, std::size_t vdim) {
  const GF& F = GF::get(q);
  (void)F;
  ProjectiveSpace ps;
  ps.q = q;
  ps.vdim = vdim;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vdim; ++i) total *= q;
  std::map<std::vector<std::uint32_t>, bool> seen;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<std::uint32_t> v(vdim);
    std::uint64_t c = code;
    for (std::size_t i = vdim; i-- > 0;) {
      v[i] = std::uint32_t(c % q);
      c /= q;
    }
    auto norm = ps.normalize(v);
    if (seen.emplace(norm, true).second) ps.points.push_back(norm);
  }
  std::sort(ps.points.begin(), ps.points.end());
  return ps;
}

std::vector<std::uint32_t> ProjectiveSpace::normalize(
    std::vector<std::uint32_t> v) const {
  const GF& F = GF::get(q);
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) {
      lead = i;
      break;
    }
  if (lead == v.size()) throw PreconditionError("zero vector has no point");
  std::uint32_t s = F.inv(v[lead]);
  for (auto& c : v) c = F.mul(c, s);
  return v;
}

Point ProjectiveSpace::index_of(std::vector<std::uint32_t> v) const {
  auto norm = normalize(std::move(v));
  auto it = std::lower_bound(points.begin(), points.end(), norm);
  if (it == points.end() || *it != norm)
    throw PreconditionError("point not in space");
  return Point(it - points.begin());
}

std::string ProjectiveSpace::label(Point i) const {
  std::string out = "[";
  for (std::size_t c = 0; c < points[i].size(); ++c) {
    if (c) out += ":";
    out += std::to_string(points[i][c]);
  }
  return out + "]";
}

std::vector<Point> ProjectiveSpace::line_through(Point a, Point b) const {
  const GF& F = GF::get(q);
  std::vector<Point> line{a};
  const auto& u = points[a];
  const auto& w = points[b];
  for (std::uint32_t lam = 0; lam < q; ++lam) {
    std::vector<std::uint32_t> v(vdim);
    for (std::size_t i = 0; i < vdim; ++i)
      v[i] = F.add(F.mul(lam, u[i]), w[i]);
    line.push_back(index_of(v));
  }
  return sorted(line);
}

FamilyGraph pg3_line_graph(std::uint32_t q, const FamilyOptions& opts) {
  if (q != 2 && q != 3 && q != 4)
    throw PreconditionError("pg3 line graph supports q in {2,3,4}");
  auto ps = ProjectiveSpace::make(q, 4);
  // lines as sorted point sets
  std::map<std::vector<Point>, std::size_t> line_index;
  std::vector<std::vector<Point>> lines;
  for (Point a = 0; a < ps.points.size(); ++a)
    for (Point b = a + 1; b < ps.points.size(); ++b) {
      auto line = ps.line_through(a, b);
      if (line.front() != a || line[1] != b) continue;  // canonical pair only
      if (line_index.emplace(line, lines.size()).second) lines.push_back(line);
    }
  FamilyGraph fg;
  fg.family = "pg3-lines";
  fg.params = {{"q", long(q)}};
  fg.expected_omega = std::size_t(q) * q + q + 1;
  fg.graph = Graph(lines.size());
  for (const auto& line : lines) {
    std::string lbl = "<";
    lbl += ps.label(line[0]);
    lbl += ",";
    lbl += ps.label(line[1]);
    lbl += ">";
    fg.labels.push_back(lbl);
  }
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      bool meet = false;
      for (Point x : lines[a])
        for (Point y : lines[b])
          if (x == y) meet = true;
      if (meet) fg.graph.add_edge(Point(a), Point(b));
    }
  if (opts.certify) {
    // pencil of lines through the first point
    for (std::size_t a = 0; a < lines.size(); ++a)
      if (lines[a].front() == 0) fg.clique.push_back(Point(a));
    fg.colouring = coclique_cover_colouring(
        fg.graph, std::size_t(q) * q + 1, "pg3-lines", opts);
    verify_family_certificate(fg);
  }
  return fg;
}

namespace {

// B(x,y) = x1 y2^s + x2 y1^s + x3 y4^s + x4 y3^s over GF(q^2), s = q
std::uint32_t hermitian_form4(const GF& F, const std::vector<std::uint32_t>& x,
                              const std::vector<std::uint32_t>& y,
                              std::uint32_t p_pow) {
  auto conj = [&](std::uint32_t a) {
    std::uint32_t r = a;
    for (std::uint32_t i = 0; i < p_pow; ++i) r = F.frobenius(r);
    return r;
  };
  std::uint32_t s = 0;
  s = F.add(s, F.mul(x[0], conj(y[1])));
  s = F.add(s, F.mul(x[1], conj(y[0])));
  s = F.add(s, F.mul(x[2], conj(y[3])));
  s = F.add(s, F.mul(x[3], conj(y[2])));
  return s;
}

}  // namespace

FamilyGraph hermitian_point_graph(std::uint32_t q, const FamilyOptions& opts) {
  if (q != 2 && q != 3)
    throw PreconditionError("hermitian point graph supports q in {2,3}");
  const std::uint32_t q2 = q * q;
  const GF& F = GF::get(q2);
  // conjugation is x -> x^q: apply Frobenius k times where p^k = q
  std::uint32_t steps = 0;
  for (std::uint32_t t = 1; t != q; t *= F.p()) ++steps;
  auto ps = ProjectiveSpace::make(q2, 4);
  std::vector<Point> iso;  // isotropic points
  for (Point i = 0; i < ps.points.size(); ++i)
    if (hermitian_form4(F, ps.points[i], ps.points[i], steps) == 0)
      iso.push_back(i);
  FamilyGraph fg;
  fg.family = "hermitian-points";
  fg.params = {{"q", long(q)}};
  fg.expected_omega = q2 + 1;
  fg.graph = Graph(iso.size());
  for (Point i : iso) fg.labels.push_back(ps.label(i));
  for (std::size_t a = 0; a < iso.size(); ++a)
    for (std::size_t b = a + 1; b < iso.size(); ++b)
      if (hermitian_form4(F, ps.points[iso[a]], ps.points[iso[b]], steps) == 0)
        fg.graph.add_edge(Point(a), Point(b));
  if (opts.certify) {
    // clique: a totally isotropic line (vertex 0 and its first neighbour)
    Point first_nb = Point(fg.graph.row(0).first());
    std::vector<std::uint32_t> u = ps.points[iso[0]];
    std::vector<std::uint32_t> w = ps.points[iso[first_nb]];
    std::map<Point, bool> on_line;
    on_line[iso[0]] = true;
    for (std::uint32_t lam = 0; lam < q2; ++lam) {
      std::vector<std::uint32_t> v(4);
      for (std::size_t i = 0; i < 4; ++i)
        v[i] = F.add(F.mul(lam, u[i]), w[i]);
      on_line[ps.index_of(v)] = true;
    }
    for (std::size_t a = 0; a < iso.size(); ++a)
      if (on_line.count(iso[a])) fg.clique.push_back(Point(a));
    fg.colouring = coclique_cover_colouring(
        fg.graph, std::size_t(q) * q * q + 1, "hermitian-points", opts);
    verify_family_certificate(fg);
  }
  return fg;
}

FamilyGraph nu3_graph(std::uint32_t q, const FamilyOptions& opts) {
  if (q != 2 && q != 3)
    throw PreconditionError("nu3 graph supports q in {2,3}");
  const std::uint32_t q2 = q * q;
  const GF& F = GF::get(q2);
  std::uint32_t steps = 0;
  for (std::uint32_t t = 1; t != q; t *= F.p()) ++steps;
  auto conj = [&](std::uint32_t a) {
    std::uint32_t r = a;
    for (std::uint32_t i = 0; i < steps; ++i) r = F.frobenius(r);
    return r;
  };
  // Hermitian curve: x1 x1^q + x2 x2^q + x3 x3^q = 0
  auto curve_val = [&](const std::vector<std::uint32_t>& x) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < 3; ++i) s = F.add(s, F.mul(x[i], conj(x[i])));
    return s;
  };
  auto ps = ProjectiveSpace::make(q2, 3);
  std::vector<bool> on_curve(ps.points.size(), false);
  std::vector<Point> outside;
  for (Point i = 0; i < ps.points.size(); ++i) {
    if (curve_val(ps.points[i]) == 0)
      on_curve[i] = true;
    else
      outside.push_back(i);
  }
  std::vector<Point> vertex_of(ps.points.size(), UINT32_MAX);
  for (std::size_t v = 0; v < outside.size(); ++v) vertex_of[outside[v]] = Point(v);

  FamilyGraph fg;
  fg.family = "nu3";
  fg.params = {{"q", long(q)}};
  fg.expected_omega = q2;
  fg.graph = Graph(outside.size());
  for (Point i : outside) fg.labels.push_back(ps.label(i));
  for (std::size_t a = 0; a < outside.size(); ++a)
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      auto line = ps.line_through(outside[a], outside[b]);
      std::size_t curve_pts = 0;
      for (Point x : line) curve_pts += on_curve[x];
      if (curve_pts == 1) fg.graph.add_edge(Point(a), Point(b));
    }
  if (opts.certify) {
    // tangent line at the first curve point: its q^2 off-curve points
    Point cp = 0;
    while (!on_curve[cp]) ++cp;
    std::vector<Point> tangent;
    for (Point other = 0; other < ps.points.size() && tangent.empty();
         ++other) {
      if (other == cp) continue;
      auto line = ps.line_through(cp, other);
      std::size_t curve_pts = 0;
      for (Point x : line) curve_pts += on_curve[x];
      if (curve_pts == 1) tangent = line;
    }
    if (tangent.empty()) throw Error("nu3: no tangent line found");
    for (Point x : tangent)
      if (!on_curve[x]) fg.clique.push_back(vertex_of[x]);
    std::sort(fg.clique.begin(), fg.clique.end());
    fg.colouring = coclique_cover_colouring(fg.graph, q2 - q + 1, "nu3", opts);
    verify_family_certificate(fg);
  }
  return fg;
}

FamilyGraph symplectic_complement_graph(std::uint32_t q,
                                        const FamilyOptions& opts) {
  if (q != 2 && q != 4)
    throw PreconditionError(
        "symplectic complement supports q in {2,4}: the theorem needs q even");
  const GF& F = GF::get(q);
  auto ps = ProjectiveSpace::make(q, 4);
  // alternating form x1 y2 - x2 y1 + x3 y4 - x4 y3 (characteristic 2)
  auto form = [&](const std::vector<std::uint32_t>& x,
                  const std::vector<std::uint32_t>& y) {
    std::uint32_t s = 0;
    s = F.add(s, F.mul(x[0], y[1]));
    s = F.sub(s, F.mul(x[1], y[0]));
    s = F.add(s, F.mul(x[2], y[3]));
    s = F.sub(s, F.mul(x[3], y[2]));
    return s;
  };
  FamilyGraph fg;
  fg.family = "symplectic-complement";
  fg.params = {{"q", long(q)}};
  fg.expected_omega = std::size_t(q) * q + 1;
  fg.graph = Graph(ps.points.size());
  for (Point i = 0; i < ps.points.size(); ++i) fg.labels.push_back(ps.label(i));
  for (Point a = 0; a < ps.points.size(); ++a)
    for (Point b = a + 1; b < ps.points.size(); ++b)
      if (form(ps.points[a], ps.points[b]) != 0) fg.graph.add_edge(a, b);
  if (opts.certify) {
    // ovoid of W(3,q): a clique of the complement graph
    auto ovoid = find_clique_of_size(fg.graph, std::size_t(q) * q + 1, nullptr,
                                     nullptr, opts.search);
    if (!ovoid) throw Error("symplectic-complement: no ovoid found");
    fg.clique = *ovoid;
    // spread: cover the points by totally isotropic lines (cocliques here)
    std::vector<std::vector<Point>> ti_lines;
    std::map<std::vector<Point>, bool> seen;
    for (Point a = 0; a < ps.points.size(); ++a)
      for (Point b = a + 1; b < ps.points.size(); ++b) {
        if (form(ps.points[a], ps.points[b]) != 0) continue;
        auto line = ps.line_through(a, b);
        if (seen.emplace(line, true).second) ti_lines.push_back(line);
      }
    auto cover = exact_cover(ps.points.size(), ti_lines, opts.cover_budget);
    if (!cover) throw Error("symplectic-complement: no spread found");
    std::vector<std::vector<Point>> parts;
    for (auto i : *cover) parts.push_back(ti_lines[i]);
    fg.colouring = parts_to_colouring(std::move(parts));
    verify_family_certificate(fg);
  }
  return fg;
}

}  // namespace synckit

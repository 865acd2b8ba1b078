#include "synckit/graph.hpp"

#include <fstream>
#include <sstream>

namespace synckit {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const Bitset& r : rows_) total += r.count();
  return total / 2;
}

void Graph::add_edge(Point u, Point v) {
  if (u == v) throw PreconditionError("loop edge rejected");
  if (u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::int64_t Graph::regular_degree() const {
  if (n_ == 0) return 0;
  std::size_t d = rows_[0].count();
  for (Point v = 1; v < n_; ++v)
    if (rows_[v].count() != d) return -1;
  return std::int64_t(d);
}

Graph Graph::complement() const {
  Graph c(n_);
  for (Point v = 0; v < n_; ++v) {
    Bitset r(n_);
    r.set_all();
    r.and_not(rows_[v]);
    r.reset(v);
    c.rows_[v] = r;
  }
  return c;
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> es;
  es.reserve(edge_count());
  for (Point u = 0; u < n_; ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) es.emplace_back(u, Point(v));
    });
  return es;
}

std::string Graph::to_dimacs() const {
  auto es = edges();
  std::ostringstream out;
  out << "p edge " << n_ << " " << es.size() << "\n";
  for (auto [u, v] : es) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

Graph Graph::from_dimacs(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0, m = 0, edges_seen = 0;
  bool have_p = false;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "p") {
      std::string fmt;
      if (!(ss >> fmt >> n >> m) || fmt != "edge" || n == 0)
        throw ParseError(origin + ": bad problem line", lineno);
      g = Graph(n);
      have_p = true;
    } else if (key == "e") {
      if (!have_p) throw ParseError(origin + ": edge before problem line", lineno);
      long long u, v;
      if (!(ss >> u >> v) || u < 1 || v < 1 || std::size_t(u) > n ||
          std::size_t(v) > n || u == v)
        throw ParseError(origin + ": bad edge line", lineno);
      if (g.has_edge(Point(u - 1), Point(v - 1)))
        throw ParseError(origin + ": duplicate edge", lineno);
      g.add_edge(Point(u - 1), Point(v - 1));
      ++edges_seen;
    } else {
      throw ParseError(origin + ": unrecognized line '" + key + "'", lineno);
    }
  }
  if (!have_p) throw ParseError(origin + ": missing problem line");
  if (edges_seen != m)
    throw ParseError(origin + ": edge count mismatch (" +
                     std::to_string(edges_seen) + " vs declared " +
                     std::to_string(m) + ")");
  return g;
}

Graph Graph::load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  return from_dimacs(in, path);
}

void Graph::save_dimacs(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write graph file " + path);
  out << to_dimacs();
}

std::vector<Bitset> orbital_rows(const PairOrbits& po, std::size_t orbit) {
  std::vector<Bitset> rows(po.n, Bitset(po.n));
  const std::size_t total = po.n * (po.n - 1) / 2;
  for (std::size_t id = 0; id < total; ++id) {
    if (po.orbit_of[id] != orbit) continue;
    auto [a, b] = pair_from_index(po.n, id);
    rows[a].set(b);
    rows[b].set(a);
  }
  return rows;
}

Graph generalized_orbital_graph(const PairOrbits& po, std::uint64_t mask,
                                bool allow_null) {
  if (po.m > 63) throw ResourceError("too many pair-orbits for mask type");
  if (mask >= (std::uint64_t(1) << po.m))
    throw PreconditionError("orbital mask out of range");
  if (mask == 0 && !allow_null)
    throw PreconditionError("empty orbital mask");
  Graph g(po.n);
  const std::size_t total = po.n * (po.n - 1) / 2;
  for (std::size_t id = 0; id < total; ++id) {
    if (!(mask >> po.orbit_of[id] & 1)) continue;
    auto [a, b] = pair_from_index(po.n, id);
    g.add_edge(a, b);
  }
  return g;
}

bool is_invariant_under(const Graph& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (Point u = 0; u < g.order(); ++u) {
    bool ok = true;
    g.row(u).for_each([&](std::size_t v) {
      if (!g.has_edge(p[u], p[Point(v)])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace synckit

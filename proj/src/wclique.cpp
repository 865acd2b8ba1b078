#include "synckit/wclique.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "synckit/parallel.hpp"

namespace synckit {

void WeightedGraph::validate() const {
  if (weights.size() != graph.order())
    throw PreconditionError("weight count does not match vertex count");
  for (const auto& w : weights) {
    if (w.size() != dim)
      throw PreconditionError("weight vector dimension mismatch");
    bool nonzero = false;
    for (auto c : w) nonzero |= c != 0;
    if (!nonzero) throw PreconditionError("all-zero weight vector");
  }
}

namespace {

struct WState {
  const WeightedGraph* wg;
  std::vector<std::uint32_t> remaining;
  std::vector<Point> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  std::size_t task_idx = 0;
  TaskControl* ctrl = nullptr;
};

// Removes candidates whose weight exceeds the remaining target in any
// coordinate.
void dominance_filter(const WState& st, Bitset& cand) {
  std::vector<Point> drop;
  cand.for_each([&](std::size_t v) {
    const auto& w = st.wg->weights[v];
    for (std::size_t c = 0; c < w.size(); ++c)
      if (w[c] > st.remaining[c]) {
        drop.push_back(Point(v));
        return;
      }
  });
  for (Point v : drop) cand.reset(v);
}

// true: solved (witness in st.chosen); false: exhausted or cancelled
bool wsearch(WState& st, Bitset cand) {
  if (++st.nodes > st.budget)
    throw ResourceError("weighted clique node budget exceeded");
  if (st.ctrl && (st.nodes & 1023) == 0 && st.ctrl->obsolete(st.task_idx))
    return false;

  bool done = true;
  for (auto r : st.remaining) done &= r == 0;
  if (done) return true;

  dominance_filter(st, cand);

  // coordinate feasibility and branch selection: fewest contributors first
  const std::size_t d = st.wg->dim;
  std::vector<std::uint64_t> avail(d, 0);
  std::vector<std::uint32_t> contributors(d, 0);
  cand.for_each([&](std::size_t v) {
    const auto& w = st.wg->weights[v];
    for (std::size_t c = 0; c < d; ++c)
      if (w[c]) {
        avail[c] += w[c];
        ++contributors[c];
      }
  });
  std::size_t pick = d;
  for (std::size_t c = 0; c < d; ++c) {
    if (st.remaining[c] == 0) continue;
    if (avail[c] < st.remaining[c]) return false;  // cannot be met
    if (pick == d || contributors[c] < contributors[pick]) pick = c;
  }
  if (pick == d) return false;  // unreachable: some coordinate was non-zero

  std::vector<Point> branch;
  cand.for_each([&](std::size_t v) {
    if (st.wg->weights[v][pick]) branch.push_back(Point(v));
  });
  for (Point v : branch) {
    const auto& w = st.wg->weights[v];
    for (std::size_t c = 0; c < d; ++c) st.remaining[c] -= w[c];
    st.chosen.push_back(v);
    Bitset sub = cand & st.wg->graph.row(v);
    if (wsearch(st, sub)) return true;
    st.chosen.pop_back();
    for (std::size_t c = 0; c < d; ++c) st.remaining[c] += w[c];
    if (st.ctrl && st.ctrl->obsolete(st.task_idx)) return false;
    cand.reset(v);
  }
  return false;
}

}  // namespace

std::optional<std::vector<Point>> vector_weighted_clique(
    const WeightedGraph& wg, const std::vector<std::uint32_t>& target,
    const SearchLimits& lim) {
  wg.validate();
  if (target.size() != wg.dim)
    throw PreconditionError("target dimension mismatch");
  const std::size_t n = wg.graph.order();

  bool all_zero = true;
  for (auto c : target) all_zero &= c == 0;
  if (all_zero) return std::vector<Point>{};  // the empty clique

  // split the root branch coordinate into tasks
  Bitset root(n);
  root.set_all();
  {
    WState probe;
    probe.wg = &wg;
    probe.remaining = target;
    dominance_filter(probe, root);
  }
  const std::size_t d = wg.dim;
  std::vector<std::uint64_t> avail(d, 0);
  std::vector<std::uint32_t> contributors(d, 0);
  root.for_each([&](std::size_t v) {
    for (std::size_t c = 0; c < d; ++c)
      if (wg.weights[v][c]) {
        avail[c] += wg.weights[v][c];
        ++contributors[c];
      }
  });
  std::size_t pick = d;
  for (std::size_t c = 0; c < d; ++c) {
    if (target[c] == 0) continue;
    if (avail[c] < target[c]) return std::nullopt;
    if (pick == d || contributors[c] < contributors[pick]) pick = c;
  }
  if (pick == d) return std::nullopt;

  std::vector<Point> branch;
  root.for_each([&](std::size_t v) {
    if (wg.weights[v][pick]) branch.push_back(Point(v));
  });

  bool split = lim.split_depth != 0 && n >= 50;
  if (!split) {
    WState st;
    st.wg = &wg;
    st.remaining = target;
    st.budget = lim.node_budget;
    if (wsearch(st, root)) {
      std::sort(st.chosen.begin(), st.chosen.end());
      return st.chosen;
    }
    return std::nullopt;
  }

  struct Out {
    bool found = false;
    std::vector<Point> witness;
  };
  TaskControl control;
  Bitset cand = root;
  std::vector<std::pair<Point, Bitset>> tasks;
  for (Point v : branch) {
    tasks.emplace_back(v, cand & wg.graph.row(v));
    cand.reset(v);
  }
  auto outs = run_indexed<Out>(
      tasks.size(), lim.workers,
      [&](std::size_t i) {
        Out o;
        if (control.obsolete(i)) return o;
        WState st;
        st.wg = &wg;
        st.remaining = target;
        st.budget = lim.node_budget;
        st.ctrl = &control;
        st.task_idx = i;
        Point v = tasks[i].first;
        const auto& w = wg.weights[v];
        for (std::size_t c = 0; c < d; ++c) {
          if (w[c] > st.remaining[c]) return o;  // root dominance
          st.remaining[c] -= w[c];
        }
        st.chosen.push_back(v);
        if (wsearch(st, tasks[i].second)) {
          o.found = true;
          std::sort(st.chosen.begin(), st.chosen.end());
          o.witness = st.chosen;
          control.record_success(i);
        }
        return o;
      },
      &control);
  for (const auto& o : outs)
    if (o.found) return o.witness;
  return std::nullopt;
}

WcliqueInstance load_wclique(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open wclique file " + path);
  return parse_wclique(in, path);
}

WcliqueInstance parse_wclique(std::istream& in, const std::string& origin) {
  WcliqueInstance inst;
  std::string line;
  std::size_t lineno = 0, n = 0, d = 0;
  bool have_p = false, have_t = false;
  std::vector<bool> have_w;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "p") {
      std::string fmt;
      if (!(ss >> fmt >> n >> d) || fmt != "wclique" || n == 0 || d == 0)
        throw ParseError(origin + ": bad problem line", lineno);
      inst.wg.graph = Graph(n);
      inst.wg.dim = d;
      inst.wg.weights.assign(n, std::vector<std::uint32_t>(d, 0));
      have_w.assign(n, false);
      have_p = true;
    } else if (key == "w") {
      if (!have_p) throw ParseError(origin + ": w before problem line", lineno);
      long long v;
      if (!(ss >> v) || v < 1 || std::size_t(v) > n)
        throw ParseError(origin + ": bad vertex in w line", lineno);
      for (std::size_t c = 0; c < d; ++c) {
        long long x;
        if (!(ss >> x) || x < 0)
          throw ParseError(origin + ": bad weight entry", lineno);
        inst.wg.weights[v - 1][c] = std::uint32_t(x);
      }
      have_w[v - 1] = true;
    } else if (key == "e") {
      if (!have_p) throw ParseError(origin + ": e before problem line", lineno);
      long long u, v;
      if (!(ss >> u >> v) || u < 1 || v < 1 || std::size_t(u) > n ||
          std::size_t(v) > n || u == v)
        throw ParseError(origin + ": bad edge line", lineno);
      inst.wg.graph.add_edge(Point(u - 1), Point(v - 1));
    } else if (key == "t") {
      if (!have_p) throw ParseError(origin + ": t before problem line", lineno);
      inst.target.assign(d, 0);
      for (std::size_t c = 0; c < d; ++c) {
        long long x;
        if (!(ss >> x) || x < 0)
          throw ParseError(origin + ": bad target entry", lineno);
        inst.target[c] = std::uint32_t(x);
      }
      have_t = true;
    } else {
      throw ParseError(origin + ": unrecognized line '" + key + "'", lineno);
    }
  }
  if (!have_p) throw ParseError(origin + ": missing problem line");
  if (!have_t) throw ParseError(origin + ": missing target line");
  for (std::size_t v = 0; v < n; ++v)
    if (!have_w[v])
      throw ParseError(origin + ": missing weight for vertex " +
                       std::to_string(v + 1));
  inst.wg.validate();
  return inst;
}

void save_wclique(const WcliqueInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write wclique file " + path);
  const std::size_t n = inst.wg.graph.order();
  out << "p wclique " << n << " " << inst.wg.dim << "\n";
  for (std::size_t v = 0; v < n; ++v) {
    out << "w " << v + 1;
    for (auto c : inst.wg.weights[v]) out << " " << c;
    out << "\n";
  }
  for (auto [u, v] : inst.wg.graph.edges())
    out << "e " << u + 1 << " " << v + 1 << "\n";
  out << "t";
  for (auto c : inst.target) out << " " << c;
  out << "\n";
}

}  // namespace synckit

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "synckit/colouring.hpp"
#include "synckit/cover.hpp"
#include "synckit/families.hpp"
#include "synckit/geometry.hpp"
#include "synckit/pipeline.hpp"
#include "synckit/report.hpp"
#include "synckit/spectral.hpp"
#include "synckit/verify.hpp"
#include "synckit/wclique.hpp"

namespace fs = std::filesystem;
using namespace synckit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndecided = 2;

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

nlohmann::ordered_json one_based(const std::vector<Point>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (Point x : v) a.push_back(x + 1);
  return a;
}

std::vector<Point> from_one_based_list(const nlohmann::json& a,
                                       std::size_t n) {
  std::vector<Point> v;
  for (const auto& x : a) {
    long val = x.get<long>();
    if (val < 1 || std::size_t(val) > n)
      throw ParseError("vertex out of range in certificate");
    v.push_back(Point(val - 1));
  }
  return v;
}

nlohmann::ordered_json colouring_json(const Colouring& col) {
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& cl : col.classes) classes.push_back(one_based(cl));
  return classes;
}

// ---------------------------------------------------------------- family --

int cmd_family(const std::string& name, long d, long m, long n, long k,
               long q, bool no_certify, const std::string& out_dir,
               unsigned threads) {
  FamilyOptions opts;
  opts.certify = !no_certify;
  opts.search.workers = threads;
  FamilyGraph fg;
  std::ostringstream stem;
  if (name == "hamming") {
    fg = hamming(std::size_t(d), std::size_t(m), opts);
    stem << "hamming_d" << d << "_m" << m;
  } else if (name == "kneser-c") {
    fg = kneser_complement(std::size_t(n), std::size_t(k), opts);
    stem << "kneser_c_n" << n << "_k" << k;
  } else if (name == "johnson") {
    fg = johnson_distance_one(std::size_t(n), opts);
    stem << "johnson_n" << n;
  } else if (name == "partition") {
    fg = partition_graph(std::size_t(n), std::size_t(k), opts);
    stem << "partition_n" << n << "_k" << k;
  } else if (name == "pg3-lines") {
    fg = pg3_line_graph(std::uint32_t(q), opts);
    stem << "pg3_lines_q" << q;
  } else if (name == "hermitian") {
    fg = hermitian_point_graph(std::uint32_t(q), opts);
    stem << "hermitian_q" << q;
  } else if (name == "nu3") {
    fg = nu3_graph(std::uint32_t(q), opts);
    stem << "nu3_q" << q;
  } else if (name == "symplectic-c") {
    fg = symplectic_complement_graph(std::uint32_t(q), opts);
    stem << "symplectic_c_q" << q;
  } else {
    throw ParseError("unknown family '" + name + "'");
  }
  fs::create_directories(out_dir);
  std::string base = out_dir + "/" + stem.str();
  fg.graph.save_dimacs(base + ".dimacs");
  write_file(base + ".labels", labels_to_text(fg));
  if (fg.certified()) {
    nlohmann::ordered_json cert;
    cert["family"] = fg.family;
    cert["omega"] = fg.expected_omega;
    cert["clique"] = one_based(fg.clique);
    cert["colouring"] = colouring_json(*fg.colouring);
    write_file(base + ".cert.json", cert.dump(2) + "\n");
  }
  std::cout << base << ".dimacs: " << fg.graph.order() << " vertices, "
            << fg.graph.edge_count() << " edges";
  if (fg.certified())
    std::cout << ", certified omega = chi = " << fg.expected_omega;
  std::cout << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- orbitals --

int cmd_orbitals(const std::string& group_file, const std::string& out_dir,
                 bool emit) {
  auto G = GroupSpec::load_grp(group_file);
  auto po = orbits_on_2subsets(G);
  std::cout << "degree " << G.degree << ", " << po.m
            << " orbits on 2-subsets\n";
  for (std::size_t i = 0; i < po.m; ++i) {
    std::cout << "orbit " << i + 1 << ": size " << po.sizes[i]
              << ", graph degree " << po.orbit_degree[i] << ", representative {"
              << po.reps[i].first + 1 << "," << po.reps[i].second + 1 << "}\n";
  }
  if (emit) {
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < po.m; ++i) {
      Graph g = generalized_orbital_graph(po, std::uint64_t(1) << i);
      g.save_dimacs(out_dir + "/" + stem_of(group_file) + "_orbital_" +
                    std::to_string(i + 1) + ".dimacs");
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- solve --

int cmd_solve_clique(const std::string& file, const std::string& out_dir,
                     const SearchLimits& lim) {
  Graph g = Graph::load_dimacs(file);
  std::string base = out_dir + "/" + stem_of(file);
  fs::create_directories(out_dir);
  try {
    auto res = max_clique(g, nullptr, lim);
    nlohmann::ordered_json j;
    j["problem"] = "clique";
    j["omega"] = res.omega;
    j["witness"] = one_based(res.witness);
    write_file(base + ".solution.json", j.dump(2) + "\n");
    g.save_dimacs(base + ".graph.dimacs");
    std::cout << "omega = " << res.omega << "\n";
    return kExitOk;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what()
              << " (best clique found: " << e.best_bound() << ")\n";
    return kExitUndecided;
  }
}

int cmd_solve_kclique(const std::string& file, std::size_t k,
                      const std::string& out_dir, const SearchLimits& lim) {
  Graph g = Graph::load_dimacs(file);
  std::string base = out_dir + "/" + stem_of(file);
  fs::create_directories(out_dir);
  try {
    auto res = find_clique_of_size(g, k, nullptr, nullptr, lim);
    nlohmann::ordered_json j;
    j["problem"] = "kclique";
    j["k"] = k;
    j["found"] = res.has_value();
    j["witness"] = res ? one_based(*res) : nlohmann::ordered_json(nullptr);
    write_file(base + ".solution.json", j.dump(2) + "\n");
    g.save_dimacs(base + ".graph.dimacs");
    std::cout << (res ? "clique found" : "no such clique") << "\n";
    return kExitOk;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitUndecided;
  }
}

int cmd_solve_chroma(const std::string& file, std::size_t k,
                     const std::string& out_dir, std::uint64_t budget) {
  Graph g = Graph::load_dimacs(file);
  std::string base = out_dir + "/" + stem_of(file);
  fs::create_directories(out_dir);
  ColouringOptions opts;
  opts.node_budget = budget;
  try {
    auto col = chromatic_le(g, k, opts);
    nlohmann::ordered_json j;
    j["problem"] = "chroma";
    j["k"] = k;
    j["found"] = col.has_value();
    j["colouring"] = col ? colouring_json(*col) : nlohmann::ordered_json(nullptr);
    write_file(base + ".solution.json", j.dump(2) + "\n");
    if (col) write_file(base + ".colouring.txt", colouring_to_text(*col));
    g.save_dimacs(base + ".graph.dimacs");
    std::cout << (col ? "colouring found" : "no such colouring") << "\n";
    return kExitOk;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitUndecided;
  }
}

int cmd_solve_wclique(const std::string& file, const std::string& out_dir,
                      const SearchLimits& lim) {
  auto inst = load_wclique(file);
  std::string base = out_dir + "/" + stem_of(file);
  fs::create_directories(out_dir);
  try {
    auto res = vector_weighted_clique(inst.wg, inst.target, lim);
    nlohmann::ordered_json j;
    j["problem"] = "wclique";
    j["found"] = res.has_value();
    j["witness"] = res ? one_based(*res) : nlohmann::ordered_json(nullptr);
    write_file(base + ".solution.json", j.dump(2) + "\n");
    std::cout << (res ? "target met" : "no clique meets the target") << "\n";
    return kExitOk;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitUndecided;
  }
}

// cover instance file: "p cover <n>", seed lines "s <v1> ...", optional
// generator lines "perm <img...>" (G) and "hperm <img...>" (H)
CoverInstance load_cover(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cover file " + path);
  CoverInstance inst;
  std::string line;
  std::size_t lineno = 0;
  bool have_p = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "p") {
      std::string fmt;
      if (!(ss >> fmt >> inst.ground) || fmt != "cover" || inst.ground == 0)
        throw ParseError(path + ": bad problem line", lineno);
      have_p = true;
    } else if (key == "s") {
      if (!have_p) throw ParseError(path + ": s before problem line", lineno);
      std::vector<Point> s;
      long v;
      while (ss >> v) {
        if (v < 1 || std::size_t(v) > inst.ground)
          throw ParseError(path + ": seed element out of range", lineno);
        s.push_back(Point(v - 1));
      }
      if (s.empty()) throw ParseError(path + ": empty seed", lineno);
      inst.seeds.push_back(std::move(s));
    } else if (key == "perm" || key == "hperm") {
      if (!have_p)
        throw ParseError(path + ": perm before problem line", lineno);
      std::vector<Point> img;
      long v;
      while (ss >> v) img.push_back(Point(v));
      if (img.size() != inst.ground)
        throw ParseError(path + ": permutation has wrong length", lineno);
      auto perm = Perm::from_one_based(img);
      if (key == "perm")
        inst.group.generators.push_back(std::move(perm));
      else
        inst.h_gens.push_back(std::move(perm));
    } else {
      throw ParseError(path + ": unrecognized line '" + key + "'", lineno);
    }
  }
  if (!have_p) throw ParseError(path + ": missing problem line");
  if (inst.seeds.empty()) throw ParseError(path + ": no seeds");
  inst.group.degree = inst.ground;
  if (inst.group.generators.empty())
    inst.group.generators.push_back(Perm::identity(inst.ground));
  return inst;
}

int cmd_solve_cover(const std::string& file, const std::string& out_dir,
                    const CoverOptions& opts) {
  auto inst = load_cover(file);
  std::string base = out_dir + "/" + stem_of(file);
  fs::create_directories(out_dir);
  try {
    auto cover = exact_cover_invariant(inst, opts);
    nlohmann::ordered_json j;
    j["problem"] = "cover";
    j["found"] = cover.has_value();
    if (cover) {
      nlohmann::ordered_json parts = nlohmann::ordered_json::array();
      for (const auto& p : *cover) parts.push_back(one_based(p));
      j["cover"] = parts;
    } else {
      j["cover"] = nullptr;
    }
    write_file(base + ".solution.json", j.dump(2) + "\n");
    std::cout << (cover ? "cover found" : "no such cover") << "\n";
    return kExitOk;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitUndecided;
  }
}

// -------------------------------------------------------------- classify --

NonSyncLibrary make_library(const Config& cfg) {
  if (!cfg.library_dir.empty() && fs::exists(cfg.library_dir))
    return NonSyncLibrary::load(cfg.library_dir);
  if (cfg.seed_builtin_library) return NonSyncLibrary::builtin_seeds();
  return NonSyncLibrary{};
}

void write_report_artifacts(const ClassificationReport& rep,
                            const std::string& base, const Config& cfg) {
  write_file(base + ".report.json", report_to_json(rep, cfg.emit_timings));
  if (rep.witness.graph)
    rep.witness.graph->save_dimacs(base + ".witness.dimacs");
}

int cmd_classify(const std::string& group_file, Config cfg,
                 const std::string& out_dir) {
  auto G = GroupSpec::load_grp(group_file);
  auto lib = make_library(cfg);
  auto rep = classify(G, lib, cfg);
  fs::create_directories(out_dir);
  write_report_artifacts(rep, out_dir + "/" + stem_of(group_file), cfg);
  if (!cfg.library_dir.empty()) lib.save(cfg.library_dir);
  std::cout << rep.name << ": " << to_string(rep.status) << " (" << rep.rule
            << ")\n";
  return rep.status == Status::Unknown ? kExitUndecided : kExitOk;
}

int cmd_batch(const std::vector<std::string>& group_files, Config cfg,
              const std::string& out_dir) {
  std::vector<GroupSpec> groups;
  std::vector<std::string> stems;
  for (const auto& f : group_files) {
    groups.push_back(GroupSpec::load_grp(f));
    if (groups.back().name.empty()) groups.back().name = stem_of(f);
    stems.push_back(stem_of(f));
  }
  auto lib = make_library(cfg);
  auto result = batch(groups, lib, cfg);
  fs::create_directories(out_dir);
  std::map<std::string, std::string> stem_by_name;
  for (std::size_t i = 0; i < groups.size(); ++i)
    stem_by_name[groups[i].name + "@" + std::to_string(groups[i].degree)] =
        stems[i];
  for (const auto& rep : result.reports) {
    auto it = stem_by_name.find(rep.name + "@" + std::to_string(rep.degree));
    std::string stem = it != stem_by_name.end()
                           ? it->second
                           : rep.name + "_" + std::to_string(rep.degree);
    write_report_artifacts(rep, out_dir + "/" + stem, cfg);
    std::cout << rep.degree << " " << rep.name << ": "
              << to_string(rep.status) << " (" << rep.rule << ")\n";
  }
  write_file(out_dir + "/batch_table3.csv", result.table3_csv);
  write_file(out_dir + "/batch_table4.csv", result.table4_csv);
  if (!cfg.library_dir.empty()) lib.save(cfg.library_dir);
  return kExitOk;
}

// ---------------------------------------------------------------- verify --

struct VerifyContext {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) violations.push_back(what);
  }
};

void verify_cert_json(const std::string& cert_file,
                      const std::string& graph_file, VerifyContext& ctx) {
  Graph g = Graph::load_dimacs(graph_file);
  std::ifstream in(cert_file);
  if (!in) throw ParseError("cannot open " + cert_file);
  nlohmann::json j;
  in >> j;
  std::size_t omega = j.at("omega").get<std::size_t>();
  auto clique = from_one_based_list(j.at("clique"), g.order());
  ctx.require(clique.size() == omega, cert_file + ": clique size != omega");
  ctx.require(check::clique(g, clique), cert_file + ": clique not adjacent");
  std::vector<std::vector<Point>> classes;
  for (const auto& cl : j.at("colouring"))
    classes.push_back(from_one_based_list(cl, g.order()));
  ctx.require(classes.size() == omega,
              cert_file + ": colouring class count != omega");
  ctx.require(check::proper_colouring(g, classes),
              cert_file + ": colouring not a proper partition");
  ctx.require(!g.is_null() && !g.is_complete(),
              cert_file + ": graph is null or complete");
}

void verify_report(const std::string& report_file,
                   const std::string& group_file, VerifyContext& ctx) {
  std::ifstream in(report_file);
  if (!in) throw ParseError("cannot open " + report_file);
  nlohmann::json j;
  in >> j;
  auto G = GroupSpec::load_grp(group_file);
  ctx.require(j.at("degree").get<std::size_t>() == G.degree,
              report_file + ": degree mismatch with group file");
  std::string status = j.at("status").get<std::string>();
  const auto& w = j.at("witness");
  auto graph_from_mask = [&](const nlohmann::json& mask_json) {
    auto po = orbits_on_2subsets(G);
    std::uint64_t mask = 0;
    for (const auto& b : mask_json) {
      std::size_t bit = b.get<std::size_t>();
      if (bit < 1 || bit > po.m)
        throw ParseError(report_file + ": orbit index out of range");
      mask |= std::uint64_t(1) << (bit - 1);
    }
    return generalized_orbital_graph(po, mask);
  };
  if (status == "non-synchronizing") {
    ctx.require(!w.at("mask").is_null(), report_file + ": missing mask");
    if (w.at("mask").is_null()) return;
    Graph g = graph_from_mask(w.at("mask"));
    std::size_t omega = w.at("omega").get<std::size_t>();
    std::size_t alpha = w.at("alpha").get<std::size_t>();
    ctx.require(omega * alpha == G.degree,
                report_file + ": omega * alpha != degree");
    auto clique = from_one_based_list(w.at("clique"), g.order());
    ctx.require(clique.size() == omega, report_file + ": clique size");
    ctx.require(check::clique(g, clique), report_file + ": clique adjacency");
    std::vector<std::vector<Point>> classes;
    for (const auto& cl : w.at("colouring"))
      classes.push_back(from_one_based_list(cl, g.order()));
    ctx.require(classes.size() == omega, report_file + ": class count");
    ctx.require(check::proper_colouring(g, classes),
                report_file + ": colouring properness");
    for (const auto& cl : classes)
      ctx.require(cl.size() == alpha, report_file + ": class size != alpha");
    ctx.require(check::invariant(g, G.generators),
                report_file + ": witness graph not G-invariant");
    ctx.require(!g.is_null() && !g.is_complete(),
                report_file + ": witness graph null or complete");
  } else if (status == "non-separating-synchronizing") {
    ctx.require(!w.at("mask").is_null(), report_file + ": missing mask");
    if (w.at("mask").is_null()) return;
    Graph g = graph_from_mask(w.at("mask"));
    auto clique = from_one_based_list(w.at("clique"), g.order());
    auto coclique = from_one_based_list(w.at("coclique"), g.order());
    ctx.require(clique.size() * coclique.size() == G.degree,
                report_file + ": clique * coclique != degree");
    ctx.require(check::clique(g, clique), report_file + ": clique adjacency");
    ctx.require(check::coclique(g, coclique),
                report_file + ": coclique adjacency");
    ctx.require(check::invariant(g, G.generators),
                report_file + ": witness graph not G-invariant");
  }
  // separating / unknown / imprimitive reports carry no certificate
}

void verify_solution(const std::string& sol_file, VerifyContext& ctx) {
  std::ifstream in(sol_file);
  if (!in) throw ParseError("cannot open " + sol_file);
  nlohmann::json j;
  in >> j;
  std::string problem = j.at("problem").get<std::string>();
  std::string base = sol_file.substr(0, sol_file.size() - 14);  // .solution.json
  if (problem == "wclique" || problem == "cover") return;  // inputs elsewhere
  Graph g = Graph::load_dimacs(base + ".graph.dimacs");
  if (problem == "clique") {
    auto witness = from_one_based_list(j.at("witness"), g.order());
    ctx.require(witness.size() == j.at("omega").get<std::size_t>(),
                sol_file + ": witness size");
    ctx.require(check::clique(g, witness), sol_file + ": witness adjacency");
  } else if (problem == "kclique") {
    if (!j.at("found").get<bool>()) return;
    auto witness = from_one_based_list(j.at("witness"), g.order());
    ctx.require(witness.size() == j.at("k").get<std::size_t>(),
                sol_file + ": witness size");
    ctx.require(check::clique(g, witness), sol_file + ": witness adjacency");
  } else if (problem == "chroma") {
    if (!j.at("found").get<bool>()) return;
    std::vector<std::vector<Point>> classes;
    for (const auto& cl : j.at("colouring"))
      classes.push_back(from_one_based_list(cl, g.order()));
    ctx.require(j.at("k").get<std::size_t>() >= classes.size(),
                sol_file + ": too many classes");
    ctx.require(check::proper_colouring(g, classes),
                sol_file + ": colouring properness");
  }
}

int cmd_verify(const std::string& report, const std::string& group,
               const std::string& cert, const std::string& graph,
               const std::string& dir, const std::string& groups_dir) {
  VerifyContext ctx;
  if (!report.empty()) verify_report(report, group, ctx);
  if (!cert.empty()) verify_cert_json(cert, graph, ctx);
  if (!dir.empty()) {
    std::vector<std::string> entries;
    for (const auto& de : fs::directory_iterator(dir))
      entries.push_back(de.path().string());
    std::sort(entries.begin(), entries.end());
    for (const auto& path : entries) {
      if (path.size() > 12 &&
          path.substr(path.size() - 12) == ".report.json") {
        std::string stem = fs::path(path).filename().string();
        stem = stem.substr(0, stem.size() - 12);
        std::string grp = (groups_dir.empty() ? dir : groups_dir) + "/" +
                          stem + ".grp";
        if (fs::exists(grp)) verify_report(path, grp, ctx);
      } else if (path.size() > 10 &&
                 path.substr(path.size() - 10) == ".cert.json") {
        std::string base = path.substr(0, path.size() - 10);
        if (fs::exists(base + ".dimacs"))
          verify_cert_json(path, base + ".dimacs", ctx);
      } else if (path.size() > 14 &&
                 path.substr(path.size() - 14) == ".solution.json") {
        verify_solution(path, ctx);
      }
    }
  }
  if (ctx.violations.empty()) {
    std::cout << "verify: " << ctx.checks << " checks passed\n";
    return kExitOk;
  }
  for (const auto& v : ctx.violations) std::cerr << "violation: " << v << "\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification toolkit for synchronizing permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir = ".";
  app.add_option("--out", out_dir, "output directory")->capture_default_str();

  // family
  auto* family = app.add_subcommand("family", "construct a family graph");
  std::string family_name;
  long fd = 0, fm = 0, fn = 0, fk = 0, fq = 0;
  bool no_certify = false;
  unsigned family_threads = 1;
  family->add_option("name", family_name,
                     "hamming | kneser-c | johnson | partition | pg3-lines | "
                     "hermitian | nu3 | symplectic-c")
      ->required();
  family->add_option("--d", fd, "hamming dimension");
  family->add_option("--m", fm, "hamming alphabet size");
  family->add_option("--n", fn, "ground-set size");
  family->add_option("--k", fk, "subset size");
  family->add_option("--q", fq, "field order");
  family->add_flag("--no-certify", no_certify, "skip the certificate search");
  family->add_option("--threads", family_threads, "worker threads");

  // orbitals
  auto* orbitals = app.add_subcommand("orbitals", "list pair-orbits");
  std::string orb_group;
  bool orb_emit = false;
  orbitals->add_option("--group", orb_group, "group file")->required();
  orbitals->add_flag("--emit", orb_emit, "write each orbital graph");

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver on a file");
  solve->require_subcommand(1);
  std::string solve_file;
  std::size_t solve_k = 0;
  unsigned solve_threads = 1;
  std::uint64_t solve_budget = 400'000'000;
  auto add_common = [&](CLI::App* sub, bool needs_k) {
    sub->add_option("--file", solve_file, "input file")->required();
    if (needs_k) sub->add_option("--k", solve_k, "target size")->required();
    sub->add_option("--threads", solve_threads, "worker threads");
    sub->add_option("--node-budget", solve_budget, "search node budget");
  };
  auto* s_clique = solve->add_subcommand("clique", "maximum clique");
  add_common(s_clique, false);
  auto* s_kclique = solve->add_subcommand("kclique", "clique of given size");
  add_common(s_kclique, true);
  auto* s_chroma = solve->add_subcommand("chroma", "k-colourability");
  add_common(s_chroma, true);
  auto* s_wclique = solve->add_subcommand("wclique", "vector-weighted clique");
  add_common(s_wclique, false);
  auto* s_cover = solve->add_subcommand("cover", "invariant exact cover");
  add_common(s_cover, false);

  // classify / batch
  auto* classify_cmd = app.add_subcommand("classify", "classify one group");
  std::string cls_group, cls_config, cls_library;
  long cls_hint = -1;
  unsigned cls_threads = 0;
  bool cls_timings = false;
  classify_cmd->add_option("--group", cls_group, "group file")->required();
  classify_cmd->add_option("--config", cls_config, "JSON config file");
  classify_cmd->add_option("--threads", cls_threads, "worker threads");
  classify_cmd->add_option("--hint", cls_hint,
                           "orbital-graph degree to try first");
  classify_cmd->add_option("--library", cls_library,
                           "non-synchronizing graph library directory");
  classify_cmd->add_flag("--timings", cls_timings,
                         "emit real timings (breaks byte-reproducibility)");

  auto* batch_cmd = app.add_subcommand("batch", "classify many groups");
  std::vector<std::string> batch_groups;
  std::string batch_config, batch_library;
  unsigned batch_threads = 0;
  bool batch_timings = false;
  batch_cmd->add_option("--groups", batch_groups, "group files")
      ->required()
      ->expected(-1);
  batch_cmd->add_option("--config", batch_config, "JSON config file");
  batch_cmd->add_option("--threads", batch_threads, "worker threads");
  batch_cmd->add_option("--library", batch_library, "library directory");
  batch_cmd->add_flag("--timings", batch_timings, "emit real timings");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-check certificates");
  std::string v_report, v_group, v_cert, v_graph, v_dir, v_groups_dir;
  verify_cmd->add_option("--report", v_report, "report JSON");
  verify_cmd->add_option("--group", v_group, "group file for the report");
  verify_cmd->add_option("--cert", v_cert, "certificate JSON");
  verify_cmd->add_option("--graph", v_graph, "graph file for the certificate");
  verify_cmd->add_option("--dir", v_dir, "directory of artifacts");
  verify_cmd->add_option("--groups-dir", v_groups_dir,
                         "directory holding the group files for --dir");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*family)
      return cmd_family(family_name, fd, fm, fn, fk, fq, no_certify, out_dir,
                        family_threads);
    if (*orbitals) return cmd_orbitals(orb_group, out_dir, orb_emit);
    if (*solve) {
      SearchLimits lim;
      lim.workers = solve_threads;
      lim.node_budget = solve_budget;
      if (*s_clique) return cmd_solve_clique(solve_file, out_dir, lim);
      if (*s_kclique)
        return cmd_solve_kclique(solve_file, solve_k, out_dir, lim);
      if (*s_chroma)
        return cmd_solve_chroma(solve_file, solve_k, out_dir, solve_budget);
      if (*s_wclique) return cmd_solve_wclique(solve_file, out_dir, lim);
      if (*s_cover) {
        CoverOptions opts;
        opts.node_budget = solve_budget;
        return cmd_solve_cover(solve_file, out_dir, opts);
      }
    }
    if (*classify_cmd) {
      Config cfg = cls_config.empty() ? Config{}
                                      : Config::from_json_file(cls_config);
      if (cls_threads) cfg.threads = cls_threads;
      if (cls_hint >= 0) {
        auto G = GroupSpec::load_grp(cls_group);
        cfg.hints[G.name] = cls_hint;
      }
      if (!cls_library.empty()) cfg.library_dir = cls_library;
      if (cls_timings) cfg.emit_timings = true;
      cfg.validate();
      return cmd_classify(cls_group, cfg, out_dir);
    }
    if (*batch_cmd) {
      Config cfg = batch_config.empty() ? Config{}
                                        : Config::from_json_file(batch_config);
      if (batch_threads) cfg.threads = batch_threads;
      if (!batch_library.empty()) cfg.library_dir = batch_library;
      if (batch_timings) cfg.emit_timings = true;
      cfg.validate();
      return cmd_batch(batch_groups, cfg, out_dir);
    }
    if (*verify_cmd)
      return cmd_verify(v_report, v_group, v_cert, v_graph, v_dir,
                        v_groups_dir);
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exhausted: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

#include "synckit/library.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "synckit/geometry.hpp"
#include "synckit/verify.hpp"

namespace synckit {

namespace fs = std::filesystem;

void NonSyncLibrary::verify_entry(const Entry& e) {
  if (e.graph.is_null() || e.graph.is_complete())
    throw Error("library entry is null or complete: " + e.provenance);
  if (e.clique.size() != e.omega || e.colouring.size() != e.omega)
    throw Error("library certificate sizes disagree: " + e.provenance);
  if (!check::clique(e.graph, e.clique))
    throw Error("library clique certificate invalid: " + e.provenance);
  if (!check::proper_colouring(e.graph, e.colouring.classes))
    throw Error("library colouring certificate invalid: " + e.provenance);
}

void NonSyncLibrary::add(Entry e) {
  verify_entry(e);
  entries_.push_back(std::move(e));
}

NonSyncLibrary::Entry entry_from_family(const FamilyGraph& fg) {
  if (!fg.certified())
    throw PreconditionError("family graph has no certificate");
  NonSyncLibrary::Entry e;
  e.graph = fg.graph;
  std::string params;
  for (const auto& [k, v] : fg.params) params += " " + k + "=" + std::to_string(v);
  e.provenance = fg.family + params;
  e.omega = fg.expected_omega;
  e.clique = fg.clique;
  e.colouring = *fg.colouring;
  return e;
}

NonSyncLibrary NonSyncLibrary::builtin_seeds() {
  NonSyncLibrary lib;
  FamilyOptions opts;
  lib.add(entry_from_family(hamming(2, 3, opts)));
  lib.add(entry_from_family(hamming(2, 4, opts)));
  lib.add(entry_from_family(hamming(2, 5, opts)));
  lib.add(entry_from_family(hamming(3, 3, opts)));
  lib.add(entry_from_family(kneser_complement(4, 2, opts)));
  lib.add(entry_from_family(kneser_complement(6, 2, opts)));
  lib.add(entry_from_family(kneser_complement(6, 3, opts)));
  lib.add(entry_from_family(kneser_complement(8, 2, opts)));
  lib.add(entry_from_family(johnson_distance_one(9, opts)));
  lib.add(entry_from_family(partition_graph(6, 2, opts)));
  lib.add(entry_from_family(pg3_line_graph(2, opts)));
  lib.add(entry_from_family(symplectic_complement_graph(2, opts)));
  lib.add(entry_from_family(nu3_graph(2, opts)));
  lib.add(entry_from_family(hermitian_point_graph(2, opts)));
  return lib;
}

std::optional<NonSyncLibrary::Match> NonSyncLibrary::find_isomorphic(
    const Graph& g, const IsoOptions& opts) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.graph.order() != g.order()) continue;
    if (e.graph.edge_count() != g.edge_count()) continue;
    try {
      auto mapping = find_isomorphism(e.graph, g, opts);
      if (mapping) return Match{i, std::move(*mapping)};
    } catch (const ResourceError&) {
      // a missed match only costs time, never correctness
    }
  }
  return std::nullopt;
}

void NonSyncLibrary::save(const std::string& dir) const {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    char stem[32];
    std::snprintf(stem, sizeof stem, "entry_%04zu", i);
    const Entry& e = entries_[i];
    e.graph.save_dimacs(dir + "/" + stem + ".dimacs");
    nlohmann::ordered_json j;
    j["provenance"] = e.provenance;
    j["omega"] = e.omega;
    nlohmann::json clique = nlohmann::json::array();
    for (Point v : e.clique) clique.push_back(v + 1);
    j["clique"] = clique;
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cl : e.colouring.classes) {
      nlohmann::json c = nlohmann::json::array();
      for (Point v : cl) c.push_back(v + 1);
      classes.push_back(c);
    }
    j["colouring"] = classes;
    std::ofstream out(dir + "/" + stem + ".cert.json");
    if (!out) throw Error("cannot write library entry " + std::string(stem));
    out << j.dump(2) << "\n";
  }
}

NonSyncLibrary NonSyncLibrary::load(const std::string& dir) {
  NonSyncLibrary lib;
  std::vector<std::string> stems;
  for (const auto& de : fs::directory_iterator(dir)) {
    auto name = de.path().filename().string();
    if (name.size() > 7 && name.substr(name.size() - 7) == ".dimacs")
      stems.push_back(name.substr(0, name.size() - 7));
  }
  std::sort(stems.begin(), stems.end());
  for (const auto& stem : stems) {
    Entry e;
    e.graph = Graph::load_dimacs(dir + "/" + stem + ".dimacs");
    std::ifstream in(dir + "/" + stem + ".cert.json");
    if (!in) throw ParseError("missing certificate for " + stem);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& ex) {
      throw ParseError("bad certificate JSON for " + stem + ": " + ex.what());
    }
    e.provenance = j.at("provenance").get<std::string>();
    e.omega = j.at("omega").get<std::size_t>();
    for (auto& v : j.at("clique")) e.clique.push_back(v.get<Point>() - 1);
    for (auto& cl : j.at("colouring")) {
      std::vector<Point> c;
      for (auto& v : cl) c.push_back(v.get<Point>() - 1);
      e.colouring.classes.push_back(std::move(c));
    }
    lib.add(std::move(e));  // re-verifies every certificate on load
  }
  return lib;
}

}  // namespace synckit

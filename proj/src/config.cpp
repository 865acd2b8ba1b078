#include "synckit/config.hpp"

#include <fstream>

#include <json.hpp>

namespace synckit {

Strategy Strategy::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::uint64_t order = 0;
  if (colon != std::string::npos) {
    try {
      order = std::stoull(text.substr(colon + 1));
    } catch (...) {
      throw ParseError("bad strategy parameter in '" + text + "'");
    }
  }
  Strategy s;
  if (name == "plain-cover") {
    if (colon != std::string::npos)
      throw ParseError("plain-cover takes no parameter");
    s.kind = Kind::PlainCover;
  } else if (name == "h-cover") {
    s.kind = Kind::HCover;
  } else if (name == "k-classwise") {
    s.kind = Kind::KClasswise;
  } else if (name == "fix-clique") {
    s.kind = Kind::FixClique;
  } else {
    throw ParseError("unknown strategy name '" + name + "'");
  }
  if (s.kind != Kind::PlainCover && order == 0)
    throw ParseError("strategy '" + name + "' needs a positive order");
  s.order = order;
  return s;
}

std::string Strategy::to_string() const {
  switch (kind) {
    case Kind::PlainCover: return "plain-cover";
    case Kind::HCover: return "h-cover:" + std::to_string(order);
    case Kind::KClasswise: return "k-classwise:" + std::to_string(order);
    case Kind::FixClique: return "fix-clique:" + std::to_string(order);
  }
  return "?";
}

void Config::validate() const {
  if (threads < 1) throw ParseError("threads must be >= 1");
  if (node_budget == 0) throw ParseError("node budget must be positive");
  if (time_budget_s && *time_budget_s == 0)
    throw ParseError("time budget must be positive");
  if (max_candidates == 0 || max_orbit_count == 0 || coset_index_bound == 0)
    throw ParseError("budgets must be positive");
}

Config Config::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("config parse failure: " + std::string(e.what()));
  }
  Config c;
  for (auto& [key, val] : j.items()) {
    if (key == "threads")
      c.threads = val.get<unsigned>();
    else if (key == "node_budget")
      c.node_budget = val.get<std::uint64_t>();
    else if (key == "time_budget_s")
      c.time_budget_s = val.get<std::uint64_t>();
    else if (key == "hints") {
      for (auto& [g, d] : val.items()) c.hints[g] = d.get<long>();
    } else if (key == "library_dir")
      c.library_dir = val.get<std::string>();
    else if (key == "strategies") {
      c.strategies.clear();
      for (auto& s : val) c.strategies.push_back(Strategy::parse(s.get<std::string>()));
    } else if (key == "max_candidates")
      c.max_candidates = val.get<std::size_t>();
    else if (key == "max_orbit_count")
      c.max_orbit_count = val.get<std::size_t>();
    else if (key == "coset_index_bound")
      c.coset_index_bound = val.get<std::size_t>();
    else if (key == "iso_node_budget")
      c.iso_node_budget = val.get<std::uint64_t>();
    else if (key == "element_enumeration_limit")
      c.element_enumeration_limit = val.get<std::uint64_t>();
    else if (key == "emit_timings")
      c.emit_timings = val.get<bool>();
    else if (key == "split_depth")
      c.split_depth = val.get<int>();
    else if (key == "seed_builtin_library")
      c.seed_builtin_library = val.get<bool>();
    else
      throw ParseError("unknown config key '" + key + "'");
  }
  c.validate();
  return c;
}

}  // namespace synckit

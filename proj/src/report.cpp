#include "synckit/report.hpp"

#include <json.hpp>

namespace synckit {

std::string report_to_json(const ClassificationReport& rep, bool with_timings) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["degree"] = rep.degree;
  if (rep.order <= BigInt(UINT64_MAX))
    j["order"] = rep.order.convert_to<std::uint64_t>();
  else
    j["order"] = rep.order.str();
  j["status"] = to_string(rep.status);
  j["rule"] = rep.rule;

  nlohmann::ordered_json w;
  if (rep.witness.mask) {
    nlohmann::json orbit_list = nlohmann::json::array();
    for (std::size_t i = 0; i < 64; ++i)
      if (*rep.witness.mask >> i & 1) orbit_list.push_back(i + 1);
    w["mask"] = orbit_list;
  } else {
    w["mask"] = nullptr;
  }
  w["omega"] = rep.witness.omega ? nlohmann::json(*rep.witness.omega)
                                 : nlohmann::json(nullptr);
  w["alpha"] = rep.witness.alpha ? nlohmann::json(*rep.witness.alpha)
                                 : nlohmann::json(nullptr);
  auto verts = [](const std::vector<Point>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Point x : v) a.push_back(x + 1);
    return a;
  };
  w["clique"] = rep.witness.clique.empty() ? nlohmann::json(nullptr)
                                           : verts(rep.witness.clique);
  w["coclique"] = rep.witness.coclique.empty() ? nlohmann::json(nullptr)
                                               : verts(rep.witness.coclique);
  if (rep.witness.colouring) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cl : rep.witness.colouring->classes)
      classes.push_back(verts(cl));
    w["colouring"] = classes;
  } else {
    w["colouring"] = nullptr;
  }
  j["witness"] = w;
  nlohmann::ordered_json t;
  t["total"] = with_timings ? rep.total_ms : 0.0;
  j["timings_ms"] = t;
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

}  // namespace synckit

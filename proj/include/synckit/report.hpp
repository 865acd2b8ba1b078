#pragma once

#include <string>

#include "synckit/pipeline.hpp"

namespace synckit {

// One JSON document per group with fixed keys {name, degree, order, status,
// rule, witness:{mask, omega, alpha, clique, coclique, colouring},
// timings_ms, notes}. Vertex and orbit numbers are 1-based. Timings are
// zeroed unless with_timings is set, keeping default outputs byte-identical
// across reruns.
std::string report_to_json(const ClassificationReport& rep, bool with_timings);

}  // namespace synckit

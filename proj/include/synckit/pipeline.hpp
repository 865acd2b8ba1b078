#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synckit/colouring.hpp"
#include "synckit/config.hpp"
#include "synckit/graph.hpp"
#include "synckit/group.hpp"
#include "synckit/library.hpp"

namespace synckit {

enum class Status {
  Separating,
  NonSeparatingSynchronizing,
  NonSynchronizing,
  Unknown,
  Imprimitive,
};

std::string to_string(Status s);

struct Witness {
  std::optional<std::uint64_t> mask;  // orbital mask of the witness graph
  std::optional<std::size_t> omega;
  std::optional<std::size_t> alpha;
  std::vector<Point> clique;
  std::vector<Point> coclique;  // for non-separating verdicts
  std::optional<Colouring> colouring;
  std::optional<Graph> graph;
};

struct ClassificationReport {
  std::string name;
  std::size_t degree = 0;
  BigInt order = 0;
  Status status = Status::Unknown;
  std::string rule;
  Witness witness;
  double total_ms = 0;  // emitted only when the config asks for timings
  std::vector<std::string> notes;
};

// Outcome of the affine degree p^2 / p^3 tests.
struct AffineOutcome {
  enum class Kind { Separating, NonSynchronizing, Inconclusive };
  Kind kind = Kind::Inconclusive;
  // Theorem-style witness for the non-synchronizing case
  Graph graph;
  std::vector<Point> clique;  // a 1-dimensional subspace, omega = p
  Colouring colouring;        // the cosets of the avoiding hyperplane
  std::string note;
};

// The two affine tests: (1) the zero stabilizer transitive on 1-dimensional
// subspaces makes G separating; (2) a hyperplane avoiding an orbit of
// 1-dimensional subspaces yields a certified non-synchronizing graph.
AffineOutcome affine_tests(const GroupSpec& G, const StabChain& chain);

ClassificationReport classify(const GroupSpec& G, NonSyncLibrary& lib,
                              const Config& cfg);

struct BatchResult {
  std::vector<ClassificationReport> reports;  // in processed order
  std::string table3_csv;  // n,name,deg,omega for non-synchronizing groups
  std::string table4_csv;  // n,name,status for every group
};

// Processes the groups per degree in non-increasing order of group order;
// the library grows across the run. Per-group errors are isolated.
BatchResult batch(const std::vector<GroupSpec>& groups, NonSyncLibrary& lib,
                  const Config& cfg);

}  // namespace synckit

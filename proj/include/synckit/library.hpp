#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synckit/colouring.hpp"
#include "synckit/families.hpp"
#include "synckit/graph.hpp"
#include "synckit/isomorphism.hpp"

namespace synckit {

// The growing list of known non-synchronizing graphs. Every entry carries a
// verified certificate: a clique and a proper colouring of equal size.
class NonSyncLibrary {
public:
  struct Entry {
    Graph graph;
    std::string provenance;
    std::size_t omega = 0;
    std::vector<Point> clique;
    Colouring colouring;
  };

  struct Match {
    std::size_t entry = 0;
    std::vector<Point> mapping;  // entry graph vertex -> probe graph vertex
  };

  NonSyncLibrary() = default;

  // Theorem-3/Theorem-4 constructions small enough for the desk-scale
  // library.
  static NonSyncLibrary builtin_seeds();

  void add(Entry e);  // verifies the certificate
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<Match> find_isomorphic(const Graph& g,
                                       const IsoOptions& opts = {}) const;

  // One DIMACS file plus one certificate JSON per entry.
  void save(const std::string& dir) const;
  static NonSyncLibrary load(const std::string& dir);

private:
  static void verify_entry(const Entry& e);
  std::vector<Entry> entries_;
};

NonSyncLibrary::Entry entry_from_family(const FamilyGraph& fg);

}  // namespace synckit

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synckit/common.hpp"

namespace synckit {

// Colouring-escalation strategies for the chi = omega searches. PlainCover
// is complete (its negative answers refute); the others only accelerate
// finding a colouring and never refute.
struct Strategy {
  enum class Kind { PlainCover, HCover, KClasswise, FixClique };
  Kind kind = Kind::PlainCover;
  std::uint64_t order = 0;  // element order for HCover / KClasswise / FixClique

  static Strategy parse(const std::string& text);  // e.g. "h-cover:31"
  std::string to_string() const;
};

struct Config {
  unsigned threads = 1;
  std::uint64_t node_budget = 400'000'000;  // per split subtree
  std::optional<std::uint64_t> time_budget_s;
  std::map<std::string, long> hints;  // group name -> orbital degree to try first
  std::string library_dir;
  std::vector<Strategy> strategies{Strategy{}};
  std::size_t max_candidates = 200000;
  std::size_t max_orbit_count = 20;
  std::size_t coset_index_bound = 10000;
  std::uint64_t iso_node_budget = 10'000'000;
  std::uint64_t element_enumeration_limit = 4'000'000;
  bool emit_timings = false;  // real timings break byte-reproducibility
  int split_depth = -1;
  bool seed_builtin_library = true;

  void validate() const;
  static Config from_json_file(const std::string& path);
};

}  // namespace synckit

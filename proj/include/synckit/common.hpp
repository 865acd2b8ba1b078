#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace synckit {

// Points and vertices are 0-based internally. All file formats, witnesses
// and reports use the 1-based numbering of the domain {1..n}.
using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries a 1-based line number when known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A documented precondition does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A configured budget (search nodes, candidates, wall time, index bound)
// was exhausted. Never a silent answer: callers either propagate it or
// downgrade the surrounding decision to "undecided".
class ResourceError : public Error {
public:
  ResourceError(const std::string& what, std::int64_t best_bound = -1)
      : Error(what), best_bound_(best_bound) {}
  // Best bound proven before exhaustion, -1 if none.
  std::int64_t best_bound() const { return best_bound_; }

private:
  std::int64_t best_bound_;
};

}  // namespace synckit

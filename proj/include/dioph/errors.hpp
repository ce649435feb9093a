#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

// A structural claim that every valid input must satisfy failed; either the
// input is a genuine counterexample or there is a bug upstream.
class ContradictionError : public std::logic_error {
 public:
  explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

// A search or comparison could not be decided within the configured budget
// (period bound, precision, safety margin). Callers may retry with a larger
// budget; the CLI maps this to exit code 3.
class InconclusiveError : public std::runtime_error {
 public:
  explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

// Working precision is too small for the requested certification.
class PrecisionError : public InconclusiveError {
 public:
  explicit PrecisionError(const std::string& what) : InconclusiveError(what) {}
};

}  // namespace dioph

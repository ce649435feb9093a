#pragma once

#include <string>

#include <json.hpp>

namespace dioph {

// Exit-code contract shared by every command: 0 reproduced/true, 1 mismatch/
// false, 2 usage error, 3 inconclusive (precision or period budget exhausted).
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

struct RunConfig {
  std::string command;
  std::string format = "text";  // json | csv | text
  unsigned int parallelism = 1;
  long precision_digits = 60;
  std::string cache_path;  // empty: no cache
  nlohmann::json params = nlohmann::json::object();

  // MPFR precision in bits for the requested decimal digits.
  long precision_bits() const;
};

// Structured command output. JSON shape:
// {command, params, provenance[], rows[], runtime_ms}; rows and provenance
// are index-aligned. Content is deterministic for a given config except for
// runtime_ms.
struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::string> provenance;
  long long runtime_ms = 0;
  int exit_code = kExitOk;

  void add_row(nlohmann::json row, std::string origin);
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(const std::string& format) const;
};

Report run_verify(const RunConfig& cfg);
Report run_search(const RunConfig& cfg);
Report run_decompose(const RunConfig& cfg);
Report run_baker(const RunConfig& cfg);
Report run_sieve(const RunConfig& cfg);
Report run_reproduce(const RunConfig& cfg);
Report run_table(const RunConfig& cfg);
Report run_recurrence(const RunConfig& cfg);

// Dispatch on cfg.command; maps exceptions onto the exit-code contract.
Report run_command(const RunConfig& cfg);

}  // namespace dioph

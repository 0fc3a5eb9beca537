#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu/systems.hpp"
#include "nambu/verify.hpp"

namespace nambu::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kRuntimeSingularity = 3,
  kVerificationFailure = 4,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Jsonl };

struct OutputSpec {
  std::optional<std::string> path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
};

// Resolved simulation request. Builtin systems keep their analytic
// gradients; custom systems are parsed expressions differentiated by central
// differences.
struct RunConfig {
  explicit RunConfig(BuiltinSystem s) : system(std::move(s)) {}

  BuiltinSystem system;
  IntegratorSpec integrator;
  Point initial_state;
  OutputSpec output;
  double default_drift_tolerance = 1e-8;
  std::map<std::string, double> drift_tolerances;
  std::uint64_t seed = 0;
};

// Parses a RunConfig JSON document. Throws ConfigError (or ParseError for
// bad expressions).
RunConfig parse_run_config(const std::string& json_text);
RunConfig default_run_config(const std::string& builtin_name);

// Custom system from {"coords", "hamiltonians", "params", "canonical",
// "normalization", "invariants"}.
BuiltinSystem parse_custom_system(const std::string& json_text);

// System part only: a RunConfig document (its "system" entry) or a bare
// custom-system object.
BuiltinSystem parse_system_config(const std::string& json_text);
std::string report_json(const VerifyReport& report);

// Entry point shared by the executable and the tests; args[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nambu::cli

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nambu {

enum class VerifySuite { Brackets, Reductions, ActionAngle, All };

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string domain;  // sampling domain, for the report
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool all_pass() const;
  std::string table() const;
};

// Deterministic in (suite, seed, samples). Throws DomainError for samples = 0.
VerifyReport run_verify(VerifySuite suite, std::uint64_t seed,
                        std::size_t samples);

}  // namespace nambu

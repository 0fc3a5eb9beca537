#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nambu {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed expression text. `position` is the 0-based byte offset into the
// source string where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A field produced a non-finite value (pole, log of non-positive, ...).
class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

// Euler-angle chart evaluated at |sin(theta)| <= 1e-12.
class GimbalSingularity : public SingularEvaluation {
 public:
  using SingularEvaluation::SingularEvaluation;
};

// Precondition or type invariant violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Integration aborted; `last_good_time` is the time of the last accepted
// state.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& message, double last_good_time)
      : Error(message + " (last good t = " + std::to_string(last_good_time) +
              ")"),
        last_good_time_(last_good_time) {}

  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace nambu

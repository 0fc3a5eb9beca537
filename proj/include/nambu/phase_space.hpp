#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nambu {

using Point = std::vector<double>;
using PointView = std::span<const double>;

// Index pair (q_i, p_i) of a canonical conjugate pair.
struct ConjugatePair {
  std::size_t q;
  std::size_t p;

  friend bool operator==(const ConjugatePair&, const ConjugatePair&) = default;
};

// Coordinates of an N-dimensional phase space. Canonical spaces additionally
// carry the (q_i, p_i) pairing used by the Poisson bracket.
class PhaseSpace {
 public:
  explicit PhaseSpace(std::vector<std::string> coord_names);

  // (q1, p1, q2, p2, ...) ordering.
  static PhaseSpace canonical_interleaved(std::vector<std::string> coord_names);
  // (q1, ..., qn, p1, ..., pn) ordering.
  static PhaseSpace canonical_blocked(std::vector<std::string> coord_names);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& coord_names() const noexcept {
    return names_;
  }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool is_canonical() const noexcept { return !pairs_.empty(); }
  const std::vector<ConjugatePair>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const PhaseSpace&, const PhaseSpace&) = default;

 private:
  PhaseSpace(std::vector<std::string> coord_names,
             std::vector<ConjugatePair> pairs);

  std::vector<std::string> names_;
  std::vector<ConjugatePair> pairs_;
};

// Throws DomainError unless x.size() == space.dim().
void require_dim(const PhaseSpace& space, PointView x);

}  // namespace nambu

#include "nambu/phase_space.hpp"

#include <algorithm>
#include <set>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

void validate_names(const std::vector<std::string>& names) {
  if (names.size() < 2) {
    throw DomainError("phase space dimension must be at least 2");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("empty coordinate name");
    if (!seen.insert(n).second) {
      throw DomainError("duplicate coordinate name '" + n + "'");
    }
  }
}

void require_even(const std::vector<std::string>& names) {
  if (names.size() % 2 != 0) {
    throw DomainError("canonical phase space must have even dimension");
  }
}

}  // namespace

PhaseSpace::PhaseSpace(std::vector<std::string> coord_names)
    : PhaseSpace(std::move(coord_names), {}) {}

PhaseSpace::PhaseSpace(std::vector<std::string> coord_names,
                       std::vector<ConjugatePair> pairs)
    : names_(std::move(coord_names)), pairs_(std::move(pairs)) {
  validate_names(names_);
}

PhaseSpace PhaseSpace::canonical_interleaved(
    std::vector<std::string> coord_names) {
  require_even(coord_names);
  std::vector<ConjugatePair> pairs;
  for (std::size_t i = 0; i < coord_names.size(); i += 2) {
    pairs.push_back({i, i + 1});
  }
  return PhaseSpace(std::move(coord_names), std::move(pairs));
}

PhaseSpace PhaseSpace::canonical_blocked(std::vector<std::string> coord_names) {
  require_even(coord_names);
  const std::size_t n = coord_names.size() / 2;
  std::vector<ConjugatePair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, i + n});
  return PhaseSpace(std::move(coord_names), std::move(pairs));
}

std::optional<std::size_t> PhaseSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void require_dim(const PhaseSpace& space, PointView x) {
  if (x.size() != space.dim()) {
    throw DomainError("point has " + std::to_string(x.size()) +
                      " components, phase space has " +
                      std::to_string(space.dim()));
  }
}

}  // namespace nambu

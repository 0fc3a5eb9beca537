#pragma once

#include <cstdint>
#include <random>

#include "nambu/phase_space.hpp"

namespace nambu {

// Seeded uniform sampler whose stream depends only on the seed (the standard
// distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  Point uniform_point(std::size_t dim, double lo, double hi) {
    Point x(dim);
    for (double& v : x) v = uniform(lo, hi);
    return x;
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0.0, static_cast<double>(n))) % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nambu

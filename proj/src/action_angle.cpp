#include "nambu/action_angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nambu/bracket.hpp"
#include "nambu/errors.hpp"

namespace nambu {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_chart(double j, double mu) {
  if (!(j > 0.0)) throw DomainError("volume action J must be positive");
  if (!(std::abs(mu) <= 1.0)) throw DomainError("mu must lie in [-1, 1]");
}

}  // namespace

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round back up to 2pi.
  return a >= kTwoPi ? 0.0 : a;
}

PlanarActionAngle planar_action_angle(double q, double p) {
  if (q == 0.0 && p == 0.0) return {0.0, 0.0};
  return {0.5 * (q * q + p * p), wrap_angle(std::atan2(p, q))};
}

SphericalActionAngle cartesian_to_spherical_aa(PointView x) {
  if (x.size() != 3) throw DomainError("spherical chart acts on R^3");
  const double r = std::hypot(x[0], x[1], x[2]);
  if (!(r > 0.0)) throw DomainError("spherical chart undefined at the origin");
  const double cos_theta = std::clamp(x[2] / r, -1.0, 1.0);
  SphericalActionAngle c;
  c.action = r * r * r / 3.0;
  c.mu = -cos_theta;
  if ((x[0] == 0.0 && x[1] == 0.0) || std::abs(x[2]) == r) {
    c.mu = x[2] > 0.0 ? -1.0 : 1.0;
    c.phi = 0.0;
    c.degenerate = true;
  } else {
    c.phi = wrap_angle(std::atan2(x[1], x[0]));
  }
  return c;
}

Point spherical_aa_to_cartesian(const SphericalActionAngle& c) {
  validate_chart(c.action, c.mu);
  const double r = std::cbrt(3.0 * c.action);
  const double cos_theta = -c.mu;
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  return {r * sin_theta * std::cos(c.phi), r * sin_theta * std::sin(c.phi),
          r * cos_theta};
}

void validate(const TopParams& params) {
  if (!(params.i1 > 0.0) || !(params.i3 > 0.0)) {
    throw DomainError("moments of inertia must be positive");
  }
}

ReducedHamiltonians top_reduced_hamiltonians(double j, double mu,
                                             const TopParams& params) {
  validate(params);
  validate_chart(j, mu);
  const double k2 = 0.5 * std::pow(3.0 * j, 2.0 / 3.0);
  const double k1 =
      k2 * (1.0 / params.i1 - mu * mu * (1.0 / params.i1 - 1.0 / params.i3));
  return {k1, k2};
}

namespace {

void reject_axis(double mu) {
  if (std::abs(mu) == 1.0) {
    throw DomainError("reduced flow undefined on the polar axis |mu| = 1");
  }
}

}  // namespace

ReducedVelocity top_reduced_flow(double j, double mu, double phi,
                                 const TopParams& params) {
  validate(params);
  validate_chart(j, mu);
  reject_axis(mu);
  (void)phi;  // the flow is independent of the azimuth
  const double l = std::cbrt(3.0 * j);
  const double l3 = -l * mu;
  return {0.0, 0.0, l3 * (1.0 / params.i3 - 1.0 / params.i1)};
}

ReducedVelocity top_reduced_flow_bracket(double j, double mu, double phi,
                                         const TopParams& params) {
  validate(params);
  validate_chart(j, mu);
  reject_axis(mu);
  const PhaseSpace chart({"J", "mu", "phi"});
  // Evaluated off-chart by the stencil near |mu| = 1; the formulas extend
  // smoothly.
  const ScalarField k1 = ScalarField::native(chart, [params](PointView c) {
    const double k2 = 0.5 * std::pow(3.0 * c[0], 2.0 / 3.0);
    return k2 * (1.0 / params.i1 -
                 c[1] * c[1] * (1.0 / params.i1 - 1.0 / params.i3));
  });
  const ScalarField k2 = ScalarField::native(chart, [](PointView c) {
    return 0.5 * std::pow(3.0 * c[0], 2.0 / 3.0);
  });
  const Point at{j, mu, phi};
  auto rate = [&](std::size_t coord) {
    const std::vector<ScalarField> fields{ScalarField::coordinate(chart, coord),
                                          k1, k2};
    return nambu_bracket(fields, at).value;
  };
  return {rate(0), rate(1), rate(2)};
}

}  // namespace nambu

#pragma once

#include "nambu/phase_space.hpp"

namespace nambu {

// Area-angle pair of a (q, p) plane: I = area / 2pi.
struct PlanarActionAngle {
  double action;  // I >= 0
  double angle;   // [0, 2pi)
};

// Volume-solid-angle chart of R^3 \ {0}: J = volume / 4pi = r^3 / 3,
// mu = -cos(theta), phi the azimuth. On the polar axis (|mu| = 1) phi is
// meaningless, set to 0, and `degenerate` is raised.
struct SphericalActionAngle {
  double action;  // J >= 0
  double mu;      // [-1, 1]
  double phi;     // [0, 2pi)
  bool degenerate = false;
};

// Symmetric top, I1 = I2.
struct TopParams {
  double i1;
  double i3;
};

struct ReducedHamiltonians {
  double k1;  // transformed kinetic energy
  double k2;  // transformed sphere L^2 / 2
};

struct ReducedVelocity {
  double j_dot;
  double mu_dot;
  double phi_dot;
};

// Wraps an angle to [0, 2pi).
double wrap_angle(double angle);

PlanarActionAngle planar_action_angle(double q, double p);

// Throws DomainError for the zero vector.
SphericalActionAngle cartesian_to_spherical_aa(PointView x);

// Throws DomainError unless J > 0 and |mu| <= 1.
Point spherical_aa_to_cartesian(const SphericalActionAngle& c);

void validate(const TopParams& params);

// K1 = (3J)^{2/3}/2 [1/I1 - mu^2 (1/I1 - 1/I3)], K2 = (3J)^{2/3}/2.
ReducedHamiltonians top_reduced_hamiltonians(double j, double mu,
                                             const TopParams& params);

// Closed form: J_dot = mu_dot = 0, phi_dot = L3 (1/I3 - 1/I1) with
// L = (3J)^{1/3}, L3 = -L mu. Rejects the degenerate axis |mu| = 1.
ReducedVelocity top_reduced_flow(double j, double mu, double phi,
                                 const TopParams& params);

// The same velocity from the Jacobian bracket {., K1, K2} in (J, mu, phi)
// coordinates, with central-difference partials of K1 and K2.
ReducedVelocity top_reduced_flow_bracket(double j, double mu, double phi,
                                         const TopParams& params);

}  // namespace nambu

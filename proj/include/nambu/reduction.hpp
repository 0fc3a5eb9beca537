#pragma once

#include <array>
#include <vector>

#include "nambu/bracket.hpp"
#include "nambu/scalar_field.hpp"

namespace nambu {

// Map from a canonical 2n-dimensional space to an m-dimensional reduced
// space, given componentwise.
class MomentumMap {
 public:
  MomentumMap(PhaseSpace source, PhaseSpace target,
              std::vector<ScalarField> components);

  const PhaseSpace& source() const noexcept { return source_; }
  const PhaseSpace& target() const noexcept { return target_; }
  const std::vector<ScalarField>& components() const noexcept {
    return components_;
  }

  Point operator()(PointView z) const;
  // Row j is the gradient of component j (m rows of length 2n).
  std::vector<Point> jacobian(PointView z) const;

  // Same map with every component differentiated by central differences.
  MomentumMap central_difference() const;

 private:
  PhaseSpace source_;
  PhaseSpace target_;
  std::vector<ScalarField> components_;
};

// f o map, a field on the source space.
ScalarField pullback(const ScalarField& f, const MomentumMap& map);

// ---- Rigid body in Euler angles -------------------------------------------

// (theta, phi, psi, p_theta, p_phi, p_psi), blocked canonical pairing.
PhaseSpace euler_angle_space();
PhaseSpace angular_momentum_space();  // (L1, L2, L3)

inline constexpr double kGimbalTolerance = 1e-12;

// Body angular momentum from Euler angles and their conjugate momenta. Throws
// GimbalSingularity when |sin(theta)| <= kGimbalTolerance.
Point angular_momentum_map(PointView state);
MomentumMap make_angular_momentum_map();

// ---- Hopf fibration ---------------------------------------------------------

// (q1, p1, q2, p2), interleaved canonical pairing.
PhaseSpace oscillator_space();
PhaseSpace hopf_target_space();  // (x1, x2, x3)

Point hopf_map(PointView z);
MomentumMap make_hopf_map();

// ---- Verification apparatus ------------------------------------------------

using Matrix3 = std::array<std::array<double, 3>, 3>;

// Entry (j,k): {x_j, x_k}_P(z) - sum_l eps_jkl d_l H2(map(z)), eps_123 = +1.
Matrix3 commutation_residual(const MomentumMap& map, const ScalarField& h2,
                             PointView z);

// Component j: {x_j, H0}_P(z) - flow_field(nambu, map(z))_j.
Point conservation_residual(const MomentumMap& map, const ScalarField& h0,
                            const NambuSystem& nambu, PointView z);

// Coefficients of a 3-form on R^4 in the basis
//   (dz2^dz3^dz4, dz1^dz3^dz4, dz1^dz2^dz4, dz1^dz2^dz3),
// i.e. component i omits coordinate i.
struct ThreeForm4D {
  std::array<double, 4> components{};
};

// Motion field of f: q_dot = d_p f, p_dot = -d_q f. Satisfies
// i_X omega = df for omega = sum dq ^ dp.
Point hamiltonian_vector_field(const ScalarField& f, PointView z);

// Components of i_X omega for omega = sum dq ^ dp.
Point interior_product(const PhaseSpace& space, PointView vector);

// i_{X_{x1}} omega ^ i_{X_{x2}} omega ^ i_{X_{x3}} omega.
ThreeForm4D dhat(const MomentumMap& map, PointView z);

// dx1 ^ dx2 ^ dx3 from the 3x3 minors of the map's Jacobian.
ThreeForm4D jacobian_minor_form(const MomentumMap& map, PointView z);

enum class WedgeIdentity {
  // point (r1, r2, psi, sigma); psi = theta1 - theta2, sigma = theta1 +
  // theta2 held fixed. rhs = 8 r1 r2 (r1^2 + r2^2).
  HopfR1R2,
  // point (r, theta, phi[, alpha]); alpha = theta1 + theta2 held fixed
  // (default 0). rhs = r^2 sin(theta).
  HopfSpherical,
};

// |det J - rhs| with J the central-difference Jacobian of
// hopf o chart with respect to the three free chart coordinates.
double wedge_identity_residual(WedgeIdentity kind, PointView point);

// Chart maps into the oscillator space used by the wedge identities.
Point hopf_r1r2_chart(PointView point);
Point hopf_spherical_chart(PointView point);

}  // namespace nambu

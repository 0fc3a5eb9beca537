#include "nambu/reduction.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "nambu/errors.hpp"

namespace nambu {

MomentumMap::MomentumMap(PhaseSpace source, PhaseSpace target,
                         std::vector<ScalarField> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  if (!source_.is_canonical()) {
    throw DomainError("momentum map source must be canonical");
  }
  if (components_.size() != target_.dim()) {
    throw DomainError("momentum map needs one component per target coordinate");
  }
  for (const auto& c : components_) {
    if (!(c.space() == source_)) {
      throw DomainError("momentum map component on a different phase space");
    }
  }
}

Point MomentumMap::operator()(PointView z) const {
  Point x(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) x[j] = components_[j](z);
  return x;
}

std::vector<Point> MomentumMap::jacobian(PointView z) const {
  std::vector<Point> rows;
  rows.reserve(components_.size());
  for (const auto& c : components_) rows.push_back(c.gradient(z));
  return rows;
}

MomentumMap MomentumMap::central_difference() const {
  std::vector<ScalarField> fd;
  for (const auto& c : components_) fd.push_back(c.central_difference());
  return MomentumMap(source_, target_, std::move(fd));
}

ScalarField pullback(const ScalarField& f, const MomentumMap& map) {
  if (!(f.space() == map.target())) {
    throw DomainError("pulled-back field must live on the map's target");
  }
  const bool analytic =
      f.gradient_mode() == GradientMode::Analytic &&
      std::all_of(map.components().begin(), map.components().end(),
                  [](const ScalarField& c) {
                    return c.gradient_mode() == GradientMode::Analytic;
                  });
  ScalarField::GradientFn gradient;
  if (analytic) {
    gradient = [f, map](PointView z) {
      const Point df = f.gradient(map(z));
      const std::vector<Point> jac = map.jacobian(z);
      Point g(z.size(), 0.0);
      for (std::size_t j = 0; j < jac.size(); ++j) {
        for (std::size_t i = 0; i < z.size(); ++i) g[i] += df[j] * jac[j][i];
      }
      return g;
    };
  }
  return ScalarField::native(
      map.source(), [f, map](PointView z) { return f(map(z)); },
      std::move(gradient));
}

// ---- Rigid body -------------------------------------------------------------

PhaseSpace euler_angle_space() {
  return PhaseSpace::canonical_blocked(
      {"theta", "phi", "psi", "p_theta", "p_phi", "p_psi"});
}

PhaseSpace angular_momentum_space() { return PhaseSpace({"L1", "L2", "L3"}); }

namespace {

double checked_sin_theta(double theta) {
  const double s = std::sin(theta);
  if (std::abs(s) <= kGimbalTolerance) {
    throw GimbalSingularity("Euler-angle chart is singular at sin(theta) = 0");
  }
  return s;
}

double l1_of(PointView s) {
  const double st = checked_sin_theta(s[0]);
  return (s[3] * st * std::cos(s[2]) + s[4] * std::sin(s[2]) -
          s[5] * std::cos(s[0]) * std::sin(s[2])) /
         st;
}

double l2_of(PointView s) {
  const double st = checked_sin_theta(s[0]);
  return (s[4] * std::cos(s[2]) - s[3] * st * std::sin(s[2]) -
          s[5] * std::cos(s[0]) * std::cos(s[2])) /
         st;
}

// With s = sin(theta), c = cos(theta), A = p_phi - p_psi c:
//   L1 =  p_theta cos(psi) + A sin(psi) / s
//   L2 = -p_theta sin(psi) + A cos(psi) / s
Point l1_gradient(PointView st) {
  const double s = checked_sin_theta(st[0]), c = std::cos(st[0]);
  const double sp = std::sin(st[2]), cp = std::cos(st[2]);
  const double a = st[4] - st[5] * c;
  const double d_theta = st[5] - a * c / (s * s);
  return {sp * d_theta, 0.0, -st[3] * sp + a * cp / s, cp, sp / s, -c * sp / s};
}

Point l2_gradient(PointView st) {
  const double s = checked_sin_theta(st[0]), c = std::cos(st[0]);
  const double sp = std::sin(st[2]), cp = std::cos(st[2]);
  const double a = st[4] - st[5] * c;
  const double d_theta = st[5] - a * c / (s * s);
  return {cp * d_theta, 0.0, -st[3] * cp - a * sp / s, -sp, cp / s, -c * cp / s};
}

}  // namespace

Point angular_momentum_map(PointView state) {
  if (state.size() != 6) {
    throw DomainError("Euler-angle state has six components");
  }
  return {l1_of(state), l2_of(state), state[5]};
}

MomentumMap make_angular_momentum_map() {
  const PhaseSpace source = euler_angle_space();
  std::vector<ScalarField> components{
      ScalarField::native(source, l1_of, l1_gradient),
      ScalarField::native(source, l2_of, l2_gradient),
      ScalarField::coordinate(source, 5),
  };
  return MomentumMap(source, angular_momentum_space(), std::move(components));
}

// ---- Hopf -------------------------------------------------------------------

PhaseSpace oscillator_space() {
  return PhaseSpace::canonical_interleaved({"q1", "p1", "q2", "p2"});
}

PhaseSpace hopf_target_space() { return PhaseSpace({"x1", "x2", "x3"}); }

Point hopf_map(PointView z) {
  if (z.size() != 4) throw DomainError("Hopf map acts on R^4");
  const double q1 = z[0], p1 = z[1], q2 = z[2], p2 = z[3];
  return {2.0 * (q1 * q2 + p1 * p2), 2.0 * (q2 * p1 - q1 * p2),
          q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2};
}

MomentumMap make_hopf_map() {
  const PhaseSpace source = oscillator_space();
  // z = (q1, p1, q2, p2)
  std::vector<ScalarField> components{
      ScalarField::native(
          source, [](PointView z) { return 2.0 * (z[0] * z[2] + z[1] * z[3]); },
          [](PointView z) {
            return Point{2.0 * z[2], 2.0 * z[3], 2.0 * z[0], 2.0 * z[1]};
          }),
      ScalarField::native(
          source, [](PointView z) { return 2.0 * (z[2] * z[1] - z[0] * z[3]); },
          [](PointView z) {
            return Point{-2.0 * z[3], 2.0 * z[2], 2.0 * z[1], -2.0 * z[0]};
          }),
      ScalarField::native(
          source,
          [](PointView z) {
            return z[0] * z[0] + z[1] * z[1] - z[2] * z[2] - z[3] * z[3];
          },
          [](PointView z) {
            return Point{2.0 * z[0], 2.0 * z[1], -2.0 * z[2], -2.0 * z[3]};
          }),
  };
  return MomentumMap(source, hopf_target_space(), std::move(components));
}

// ---- Verification -----------------------------------------------------------

namespace {

int levi_civita(std::size_t j, std::size_t k, std::size_t l) {
  if (j == k || k == l || j == l) return 0;
  // Even permutations of (0,1,2).
  return ((j + 1) % 3 == k) ? 1 : -1;
}

void require_target_3(const MomentumMap& map) {
  if (map.target().dim() != 3) {
    throw DomainError("reduced space must be three-dimensional");
  }
}

}  // namespace

Matrix3 commutation_residual(const MomentumMap& map, const ScalarField& h2,
                             PointView z) {
  require_target_3(map);
  const Point dh = h2.gradient(map(z));
  const auto& x = map.components();
  Matrix3 r{};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      double rhs = 0.0;
      for (std::size_t l = 0; l < 3; ++l) rhs += levi_civita(j, k, l) * dh[l];
      r[j][k] = poisson_bracket(x[j], x[k], z) - rhs;
    }
  }
  return r;
}

Point conservation_residual(const MomentumMap& map, const ScalarField& h0,
                            const NambuSystem& nambu, PointView z) {
  require_target_3(map);
  if (!(nambu.space() == map.target())) {
    throw DomainError("Nambu system must live on the map's target");
  }
  if (!(h0.space() == map.source())) {
    throw DomainError("H0 must live on the map's source");
  }
  const Point v = flow_field(nambu, map(z));
  Point r(3);
  for (std::size_t j = 0; j < 3; ++j) {
    r[j] = poisson_bracket(map.components()[j], h0, z) - v[j];
  }
  return r;
}

Point hamiltonian_vector_field(const ScalarField& f, PointView z) {
  const PhaseSpace& space = f.space();
  if (!space.is_canonical()) {
    throw DomainError("Hamiltonian vector fields need a canonical space");
  }
  const Point df = f.gradient(z);
  Point v(z.size(), 0.0);
  for (const auto& [q, p] : space.pairs()) {
    v[q] = df[p];
    v[p] = -df[q];
  }
  return v;
}

Point interior_product(const PhaseSpace& space, PointView vector) {
  // omega(X, .) = sum X^q dp - X^p dq
  Point alpha(vector.size(), 0.0);
  for (const auto& [q, p] : space.pairs()) {
    alpha[p] += vector[q];
    alpha[q] -= vector[p];
  }
  return alpha;
}

namespace {

constexpr std::array<std::array<std::size_t, 3>, 4> kTriples{{
    {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2},
}};

void require_4_to_3(const MomentumMap& map) {
  if (map.source().dim() != 4 || map.target().dim() != 3) {
    throw DomainError("3-form components are defined for maps R^4 -> R^3");
  }
}

}  // namespace

ThreeForm4D dhat(const MomentumMap& map, PointView z) {
  require_4_to_3(map);
  std::array<Point, 3> alpha;
  for (std::size_t j = 0; j < 3; ++j) {
    alpha[j] = interior_product(
        map.source(), hamiltonian_vector_field(map.components()[j], z));
  }
  // (a1 ^ a2 ^ a3)_{abc} = sum over permutations s of sgn(s)
  //   a1[s(a)] a2[s(b)] a3[s(c)]
  static constexpr std::array<std::array<std::size_t, 3>, 6> kPerms{{
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
  }};
  ThreeForm4D form;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& idx = kTriples[i];
    double sum = 0.0;
    for (std::size_t s = 0; s < kPerms.size(); ++s) {
      const double sign = s < 3 ? 1.0 : -1.0;
      sum += sign * alpha[0][idx[kPerms[s][0]]] * alpha[1][idx[kPerms[s][1]]] *
             alpha[2][idx[kPerms[s][2]]];
    }
    form.components[i] = sum;
  }
  return form;
}

ThreeForm4D jacobian_minor_form(const MomentumMap& map, PointView z) {
  require_4_to_3(map);
  const std::vector<Point> jac = map.jacobian(z);
  ThreeForm4D form;
  for (std::size_t i = 0; i < 4; ++i) {
    Eigen::Matrix3d minor;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) minor(r, c) = jac[r][kTriples[i][c]];
    }
    form.components[i] = minor.determinant();
  }
  return form;
}

namespace {

Point r1r2_chart_unchecked(PointView point) {
  const double r1 = point[0], r2 = point[1];
  const double theta1 = 0.5 * (point[3] + point[2]);
  const double theta2 = 0.5 * (point[3] - point[2]);
  return {r1 * std::cos(theta1), r1 * std::sin(theta1), r2 * std::cos(theta2),
          r2 * std::sin(theta2)};
}

Point spherical_chart_unchecked(PointView point) {
  const double r = point[0], theta = point[1], phi = point[2];
  const double alpha = point.size() == 4 ? point[3] : 0.0;
  const double sr = std::sqrt(r);
  const double r1 = sr * std::cos(0.5 * theta);
  const double r2 = sr * std::sin(0.5 * theta);
  const double theta1 = 0.5 * (alpha + phi);
  const double theta2 = 0.5 * (alpha - phi);
  return {r1 * std::cos(theta1), r1 * std::sin(theta1), r2 * std::cos(theta2),
          r2 * std::sin(theta2)};
}

void check_r1r2_domain(PointView point) {
  if (point.size() != 4) {
    throw DomainError("(r1, r2, psi, sigma) chart point has four components");
  }
  if (!(point[0] > 0.0) || !(point[1] > 0.0)) {
    throw DomainError("(r1, r2) chart needs r1 > 0 and r2 > 0");
  }
}

void check_spherical_domain(PointView point) {
  if (point.size() != 3 && point.size() != 4) {
    throw DomainError("(r, theta, phi[, alpha]) chart point has 3 or 4 "
                      "components");
  }
  if (!(point[0] > 0.0) || !(point[1] > 0.0) || !(point[1] < std::numbers::pi)) {
    throw DomainError("spherical chart needs r > 0 and 0 < theta < pi");
  }
}

}  // namespace

Point hopf_r1r2_chart(PointView point) {
  check_r1r2_domain(point);
  return r1r2_chart_unchecked(point);
}

Point hopf_spherical_chart(PointView point) {
  check_spherical_domain(point);
  return spherical_chart_unchecked(point);
}

double wedge_identity_residual(WedgeIdentity kind, PointView point) {
  if (kind == WedgeIdentity::HopfR1R2) {
    check_r1r2_domain(point);
  } else {
    check_spherical_domain(point);
  }
  // The stencil may straddle the chart boundary; the chart formulas are
  // smooth there.
  Point base(point.begin(), point.end());
  auto image = [kind](const Point& p) {
    return hopf_map(kind == WedgeIdentity::HopfR1R2
                        ? r1r2_chart_unchecked(p)
                        : spherical_chart_unchecked(p));
  };

  Eigen::Matrix3d jac;
  for (std::size_t c = 0; c < 3; ++c) {
    const double h = finite_difference_step(base[c]);
    Point up = base, down = base;
    up[c] += h;
    down[c] -= h;
    const Point xu = image(up);
    const Point xd = image(down);
    for (std::size_t r = 0; r < 3; ++r) jac(r, c) = (xu[r] - xd[r]) / (2.0 * h);
  }

  double rhs = 0.0;
  if (kind == WedgeIdentity::HopfR1R2) {
    const double r1 = base[0], r2 = base[1];
    rhs = 8.0 * r1 * r2 * (r1 * r1 + r2 * r2);
  } else {
    rhs = base[0] * base[0] * std::sin(base[1]);
  }
  return std::abs(jac.determinant() - rhs);
}

}  // namespace nambu

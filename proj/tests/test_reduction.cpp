#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nambu/errors.hpp"
#include "nambu/reduction.hpp"
#include "nambu/sampling.hpp"
#include "nambu/systems.hpp"

using namespace nambu;

namespace {

constexpr double kPi = std::numbers::pi;

Point euler_state(Sampler& rng, double band) {
  for (;;) {
    Point s = rng.uniform_point(6, -2, 2);
    if (std::abs(std::sin(s[0])) >= band) return s;
  }
}

double max_entry(const Matrix3& m) {
  double r = 0;
  for (const auto& row : m)
    for (double v : row) r = std::max(r, std::abs(v));
  return r;
}

ScalarField scaled_square_norm(double c) {
  return c * half_square_norm(hopf_target_space());
}

}  // namespace

TEST(AngularMomentumMap, Examples) {
  const Point l = angular_momentum_map(Point{kPi / 2, 0.4, 0, 1, 0, 0});
  EXPECT_NEAR(l[0], 1, 1e-15);
  EXPECT_NEAR(l[1], 0, 1e-15);
  EXPECT_NEAR(l[2], 0, 1e-15);
  Sampler rng(1);
  for (int i = 0; i < 20; ++i) {
    const Point s = euler_state(rng, 1e-3);
    EXPECT_EQ(angular_momentum_map(s)[2], s[5]);
  }
}

TEST(AngularMomentumMap, GimbalSingularity) {
  EXPECT_THROW(angular_momentum_map(Point{0, 0, 0, 1, 1, 1}), GimbalSingularity);
  EXPECT_THROW(angular_momentum_map(Point{kPi, 0, 0, 1, 1, 1}), GimbalSingularity);
  EXPECT_THROW(angular_momentum_map(Point{1e-13, 0, 0, 1, 1, 1}), GimbalSingularity);
  EXPECT_NO_THROW(angular_momentum_map(Point{1e-6, 0, 0, 1, 1, 1}));
  const MomentumMap map = make_angular_momentum_map();
  EXPECT_THROW(map(Point{0, 0, 0, 1, 1, 1}), SingularEvaluation);
}

TEST(AngularMomentumMap, MagnitudeIdentity) {
  Sampler rng(2);
  for (int i = 0; i < 100; ++i) {
    const Point s = euler_state(rng, 1e-3);
    const Point l = angular_momentum_map(s);
    const double lhs = l[0] * l[0] + l[1] * l[1] + l[2] * l[2];
    const double q = (s[4] - s[5] * std::cos(s[0])) / std::sin(s[0]);
    const double rhs = s[3] * s[3] + q * q + s[5] * s[5];
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, rhs));
  }
}

TEST(AngularMomentumMap, AnalyticJacobianMatchesDifferences) {
  const MomentumMap map = make_angular_momentum_map();
  const MomentumMap fd = map.central_difference();
  Sampler rng(3);
  for (int i = 0; i < 100; ++i) {
    const Point s = euler_state(rng, 0.3);
    const auto a = map.jacobian(s), b = fd.jacobian(s);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 6; ++k)
        EXPECT_NEAR(a[j][k], b[j][k], 1e-6 * std::max(1.0, std::abs(a[j][k])));
  }
}

TEST(HopfMap, Examples) {
  EXPECT_EQ(hopf_map(Point{1, 0, 0, 0}), (Point{0, 0, 1}));
  EXPECT_EQ(hopf_map(Point{0, 0, 1, 0}), (Point{0, 0, -1}));
  const Point x = hopf_map(Point{1, 1, 1, 1});
  EXPECT_EQ(x, (Point{4, 0, 0}));
  EXPECT_DOUBLE_EQ(std::hypot(x[0], x[1], x[2]), 4.0);
}

TEST(HopfMap, NormIdentity) {
  Sampler rng(4);
  for (int i = 0; i < 100; ++i) {
    const Point z = rng.uniform_point(4, -2, 2);
    const Point x = hopf_map(z);
    const double n2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3];
    EXPECT_NEAR(std::hypot(x[0], x[1], x[2]), n2, 1e-14 * n2);
  }
}

TEST(MomentumMap, ValidatesShape) {
  const auto src = oscillator_space();
  const auto tgt = hopf_target_space();
  EXPECT_THROW(MomentumMap(src, tgt, {ScalarField::coordinate(src, 0)}), DomainError);
  EXPECT_THROW(MomentumMap(PhaseSpace({"a", "b"}), tgt,
                           {ScalarField::coordinate(PhaseSpace({"a", "b"}), 0),
                            ScalarField::coordinate(PhaseSpace({"a", "b"}), 0),
                            ScalarField::coordinate(PhaseSpace({"a", "b"}), 1)}),
               DomainError);
}

TEST(MomentumMap, Pullback) {
  const MomentumMap hopf = make_hopf_map();
  const auto h = pullback(half_square_norm(hopf_target_space()), hopf);
  const Point z{0.3, -0.2, 1.1, 0.5};
  const Point x = hopf_map(z);
  EXPECT_DOUBLE_EQ(h(z), 0.5 * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  EXPECT_EQ(h.gradient_mode(), GradientMode::Analytic);
}

TEST(Commutation, HopfMatchesTransitionFunction) {
  const MomentumMap map = make_hopf_map().central_difference();
  Sampler rng(5);
  for (int i = 0; i < 100; ++i) {
    const Point z = rng.uniform_point(4, -2, 2);
    const Matrix3 r = commutation_residual(map, scaled_square_norm(-4.0), z);
    EXPECT_LT(max_entry(r), 1e-6);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(r[j][j], 0.0);
  }
}

TEST(Commutation, AngularMomentumBodyFrame) {
  const MomentumMap map = make_angular_momentum_map().central_difference();
  Sampler rng(6);
  for (int i = 0; i < 100; ++i) {
    const Point s = euler_state(rng, 0.2);
    EXPECT_LT(max_entry(commutation_residual(map, scaled_square_norm(-1.0), s)), 1e-6);
  }
}

// With H2 = +|x|^2/2 the residual is 2|L_l| off the diagonal: the map
// realizes the opposite-sign algebra.
TEST(Commutation, AngularMomentumPositiveSignResidual) {
  const MomentumMap map = make_angular_momentum_map();
  const Point s{kPi / 3, 0.2, 0.7, 0.4, 1.1, -0.3};
  const Point l = angular_momentum_map(s);
  const Matrix3 r = commutation_residual(map, scaled_square_norm(1.0), s);
  EXPECT_NEAR(r[0][1], -2 * l[2], 1e-9);
  EXPECT_NEAR(r[1][2], -2 * l[0], 1e-9);
  EXPECT_NEAR(r[2][0], -2 * l[1], 1e-9);
}

TEST(Conservation, RigidBodyEulerAngles) {
  const Inertia inertia{1, 2, 3};
  const MomentumMap map = make_angular_momentum_map();
  const NambuSystem sys = rigid_body_system(inertia);
  const auto h0 = pullback(rigid_body_kinetic(angular_momentum_space(), inertia), map);
  Sampler rng(7);
  for (int i = 0; i < 100; ++i) {
    const Point s = euler_state(rng, 1e-3);
    for (double r : conservation_residual(map, h0, sys, s)) EXPECT_LT(std::abs(r), 1e-5);
  }
}

TEST(Conservation, HopfFlowIsStationary) {
  const MomentumMap map = make_hopf_map();
  const auto h0 = half_square_norm(oscillator_space());
  const auto tgt = hopf_target_space();
  const auto h1 = ScalarField::native(
      tgt, [](PointView x) { return 0.5 * std::hypot(x[0], x[1], x[2]); });
  Sampler rng(8);
  for (const auto& h2 : {scaled_square_norm(-4.0), h1}) {
    const NambuSystem sys(tgt, {h1, h2});
    for (int i = 0; i < 100; ++i) {
      const Point z = rng.uniform_point(4, -2, 2);
      for (double r : conservation_residual(map, h0, sys, z)) EXPECT_LT(std::abs(r), 1e-6);
    }
  }
}

TEST(Conservation, RequiresThreeDimensionalTarget) {
  const auto s = PhaseSpace::canonical_interleaved({"q", "p"});
  const MomentumMap id(s, PhaseSpace({"x", "y"}),
                       {ScalarField::coordinate(s, 0), ScalarField::coordinate(s, 1)});
  const NambuSystem sys(PhaseSpace({"x", "y"}),
                        {ScalarField::coordinate(PhaseSpace({"x", "y"}), 0)});
  EXPECT_THROW(conservation_residual(id, half_square_norm(s), sys, Point{1, 0}), DomainError);
  EXPECT_THROW(commutation_residual(id, half_square_norm(PhaseSpace({"x", "y"})), Point{1, 0}),
               DomainError);
}

TEST(Dhat, ProductMap) {
  const auto src = oscillator_space();
  const MomentumMap map(src, hopf_target_space(),
                        {ScalarField::coordinate(src, 0), ScalarField::coordinate(src, 1),
                         ScalarField::coordinate(src, 0) * ScalarField::coordinate(src, 1)});
  Sampler rng(9);
  for (int i = 0; i < 100; ++i) {
    const Point z = rng.uniform_point(4, -2, 2);
    const auto a = dhat(map, z), b = jacobian_minor_form(map, z);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(a.components[k], b.components[k], 1e-9);
  }
}

TEST(Dhat, HopfMapEqualsMinors) {
  const MomentumMap map = make_hopf_map();
  Sampler rng(10);
  for (int i = 0; i < 100; ++i) {
    const Point z = rng.uniform_point(4, -2, 2);
    const auto a = dhat(map, z), b = jacobian_minor_form(map, z);
    for (int k = 0; k < 4; ++k)
      EXPECT_NEAR(a.components[k], b.components[k], 1e-9 * std::max(1.0, std::abs(b.components[k])));
  }
}

TEST(Dhat, ConstantComponentGivesZeroForm) {
  const auto src = oscillator_space();
  const MomentumMap map(src, hopf_target_space(),
                        {ScalarField::coordinate(src, 0), ScalarField::constant(src, 2.0),
                         ScalarField::coordinate(src, 3)});
  for (double c : dhat(map, Point{0.3, 1, -2, 0.5}).components) EXPECT_EQ(c, 0.0);
}

TEST(Dhat, BasisOrder) {
  // Components (q1, p1, q2): dq1^dp1^dq2 is e123, the last basis slot.
  const auto src = oscillator_space();
  const MomentumMap map(src, hopf_target_space(),
                        {ScalarField::coordinate(src, 0), ScalarField::coordinate(src, 1),
                         ScalarField::coordinate(src, 2)});
  const auto m = jacobian_minor_form(map, Point{0, 0, 0, 0});
  EXPECT_EQ(m.components, (std::array<double, 4>{0, 0, 0, 1}));
  const auto d = dhat(map, Point{0, 0, 0, 0});
  EXPECT_EQ(d.components, (std::array<double, 4>{0, 0, 0, 1}));
}

TEST(InteriorProduct, GivesDifferential) {
  const auto src = oscillator_space();
  const auto f = pullback(ScalarField::coordinate(hopf_target_space(), 0), make_hopf_map());
  const Point z{0.4, -1.2, 0.9, 0.1};
  const Point df = interior_product(src, hamiltonian_vector_field(f, z));
  const Point g = f.gradient(z);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(df[k], g[k], 1e-14);
}

TEST(Wedge, R1R2Example) {
  EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfR1R2, Point{1, 1, 0.4, 1.1}), 1e-5);
}

TEST(Wedge, SphericalExample) {
  EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfSpherical, Point{1, kPi / 2, 0.3}),
            1e-5);
}

TEST(Wedge, SphericalNearAxis) {
  for (double th : {1e-3, 1e-5, 1e-7})
    EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfSpherical, Point{1, th, 0.3}), 1e-5);
}

TEST(Wedge, DomainChecked) {
  EXPECT_THROW(wedge_identity_residual(WedgeIdentity::HopfR1R2, Point{-1, 1, 0, 0}), DomainError);
  EXPECT_THROW(wedge_identity_residual(WedgeIdentity::HopfSpherical, Point{1, 0, 0}), DomainError);
  EXPECT_THROW(wedge_identity_residual(WedgeIdentity::HopfSpherical, Point{1, 4, 0}), DomainError);
  EXPECT_THROW(wedge_identity_residual(WedgeIdentity::HopfSpherical, Point{0, 1, 0}), DomainError);
}

TEST(Wedge, RandomChartInterior) {
  Sampler rng(11);
  for (int i = 0; i < 100; ++i) {
    const Point a{rng.uniform(0.1, 2), rng.uniform(0.1, 2), rng.uniform(0, 2 * kPi),
                  rng.uniform(0, 2 * kPi)};
    EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfR1R2, a), 1e-5);
    const Point b{rng.uniform(0.1, 2), rng.uniform(0.05, kPi - 0.05), rng.uniform(0, 2 * kPi),
                  rng.uniform(0, 2 * kPi)};
    EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfSpherical, b), 1e-5);
  }
}

// Both charts land on the same oscillator point and hence the same Hopf
// image; the two identities then describe one 3-form.
TEST(Wedge, ChartsAgreeOnOverlap) {
  const double r = 1.3, th = 1.1, phi = 0.7, alpha = 0.4;
  const Point z = hopf_spherical_chart(Point{r, th, phi, alpha});
  const double r1 = std::hypot(z[0], z[1]), r2 = std::hypot(z[2], z[3]);
  const double t1 = std::atan2(z[1], z[0]), t2 = std::atan2(z[3], z[2]);
  const Point w = hopf_r1r2_chart(Point{r1, r2, t1 - t2, t1 + t2});
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(w[k], z[k], 1e-12);
  const Point x = hopf_map(z);
  EXPECT_NEAR(std::hypot(x[0], x[1], x[2]), r, 1e-12);
  EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfR1R2, Point{r1, r2, t1 - t2, t1 + t2}),
            1e-5);
  EXPECT_LT(wedge_identity_residual(WedgeIdentity::HopfSpherical, Point{r, th, phi, alpha}),
            1e-5);
}

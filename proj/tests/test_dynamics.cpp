#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nambu/dynamics.hpp"
#include "nambu/errors.hpp"
#include "nambu/reduction.hpp"
#include "nambu/sampling.hpp"
#include "nambu/systems.hpp"

using namespace nambu;

namespace {

constexpr double kPi = std::numbers::pi;

VectorField oscillator() {
  return [](PointView x) { return Point{x[1], -x[0]}; };
}

double final_error(double dt) {
  const IntegratorSpec spec{Method::Rk4, dt, 2 * kPi};
  const Trajectory t = integrate(oscillator(), Point{1, 0}, spec);
  const Point& y = t.states.back();
  return std::hypot(y[0] - 1, y[1]);
}

}  // namespace

TEST(EulerRhs, Examples) {
  const Point v = euler_rhs(Point{1, 1, 1}, {1, 2, 3});
  EXPECT_NEAR(v[0], -1.0 / 6.0, 1e-15);
  EXPECT_NEAR(v[1], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(v[2], -0.5, 1e-15);
  for (double c : euler_rhs(Point{0.3, -2, 1.1}, {1.7, 1.7, 1.7})) EXPECT_EQ(c, 0.0);
  EXPECT_EQ(euler_rhs(Point{0.3, -2, 1.1}, {1.7, 1.7, 0.4})[2], 0.0);
  EXPECT_THROW(euler_rhs(Point{1, 1, 1}, {1, 0, 1}), DomainError);
}

TEST(IntegratorSpec, Validation) {
  EXPECT_THROW((IntegratorSpec{Method::Rk4, 0.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((IntegratorSpec{Method::Rk4, 1e-3, -1.0}.validate()), DomainError);
  EXPECT_THROW((IntegratorSpec{Method::Rk45, 1e-3, 1.0, 0.0, 0.0}.validate()), DomainError);
  EXPECT_NO_THROW(IntegratorSpec{}.validate());
}

TEST(Integrate, HarmonicOscillatorPeriod) {
  const Trajectory t = integrate(oscillator(), Point{1, 0}, {Method::Rk4, 1e-3, 2 * kPi});
  EXPECT_NEAR(t.states.back()[0], 1.0, 1e-9);
  EXPECT_NEAR(t.states.back()[1], 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(t.times.back(), 2 * kPi);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t.times[i], t.times[i - 1]);
}

TEST(Integrate, CanonicalVectorField) {
  const auto s = PhaseSpace::canonical_interleaved({"q", "p"});
  const VectorField f = canonical_vector_field(half_square_norm(s));
  const Point v = f(Point{0.3, -0.7});
  EXPECT_DOUBLE_EQ(v[0], -0.7);
  EXPECT_DOUBLE_EQ(v[1], -0.3);
}

TEST(Integrate, Rk4Order) {
  const double ratio = final_error(0.1) / final_error(0.05);
  EXPECT_GT(ratio, 12.0);
  EXPECT_LT(ratio, 20.0);
}

TEST(Integrate, RigidBodyConservesBothHamiltonians) {
  const BuiltinSystem sys = make_builtin_system("rigid_body", {});
  const Trajectory t = integrate(sys.rhs, Point{1, 1, 1}, {Method::Rk4, 1e-3, 50.0},
                                 sys.invariants);
  ASSERT_EQ(t.invariant_names.size(), 2u);
  for (double d : t.drift) EXPECT_LT(d, 1e-8);
  EXPECT_EQ(t.size(), 50001u);
}

TEST(Integrate, NambuSystemOverload) {
  const NambuSystem sys = rigid_body_system({1, 2, 3});
  const std::vector<NamedField> inv{{"H1", sys.hamiltonians()[0]}};
  const Trajectory t = integrate(sys, Point{1, 1, 1}, {Method::Rk4, 1e-2, 1.0}, inv);
  EXPECT_EQ(t.size(), 101u);
  EXPECT_LT(t.drift[0], 1e-8);
}

TEST(Integrate, HopfImageConstant) {
  const BuiltinSystem sys = make_builtin_system("hopf_oscillator", {});
  const Point x0{1, 0, 0.5, 0.2};
  const Trajectory t = integrate(sys.rhs, x0, {Method::Rk4, 1e-3, 20.0});
  const Point h0 = hopf_map(x0);
  double worst = 0;
  for (const Point& z : t.states) {
    const Point h = hopf_map(z);
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(h[k] - h0[k]));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Integrate, Rk45Accuracy) {
  const Trajectory t = integrate(oscillator(), Point{1, 0},
                                 {Method::Rk45, 0.1, 2 * kPi, 1e-10, 1e-12});
  EXPECT_NEAR(t.states.back()[0], 1.0, 1e-8);
  EXPECT_NEAR(t.states.back()[1], 0.0, 1e-8);
  EXPECT_DOUBLE_EQ(t.times.back(), 2 * kPi);
  EXPECT_LT(t.size(), 2000u);
}

TEST(Integrate, Rk45TighterToleranceMoreSteps) {
  const Trajectory loose = integrate(oscillator(), Point{1, 0},
                                     {Method::Rk45, 0.1, 10.0, 1e-6, 1e-8});
  const Trajectory tight = integrate(oscillator(), Point{1, 0},
                                     {Method::Rk45, 0.1, 10.0, 1e-11, 1e-13});
  EXPECT_GT(tight.size(), loose.size());
}

TEST(Integrate, Rk45StepUnderflow) {
  // Finite-time blow-up at t = 1; the controller shrinks the step into
  // the floor before reaching it.
  const VectorField blowup = [](PointView x) { return Point{x[0] * x[0]}; };
  try {
    integrate(blowup, Point{1.0}, {Method::Rk45, 1e-2, 2.0, 1e-10, 1e-12});
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_LT(e.last_good_time(), 1.0);
    EXPECT_GT(e.last_good_time(), 0.9);
  }
}

TEST(Integrate, SingularMidRun) {
  const auto s = PhaseSpace({"x", "y"});
  const auto f = ScalarField::parse("1/(1 - x)", s);
  const VectorField rhs = [](PointView) { return Point{1.0, 0.0}; };
  const std::vector<NamedField> inv{{"f", f}};
  try {
    integrate(rhs, Point{0, 0}, {Method::Rk4, 0.25, 2.0}, inv);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_DOUBLE_EQ(e.last_good_time(), 0.75);
  }
  const VectorField bad = [](PointView x) {
    return Point{x[0] > 0.5 ? std::nan("") : 1.0, 0.0};
  };
  EXPECT_THROW(integrate(bad, Point{0, 0}, {Method::Rk4, 0.1, 2.0}), IntegrationError);
}

TEST(Integrate, DimensionChecked) {
  EXPECT_THROW(integrate(rigid_body_system({1, 2, 3}), Point{1, 1}, {}), DomainError);
}

TEST(SymmetricTop, AnalyticExamples) {
  const TopParams p{2, 1};
  const Point l0{1, 0, 1};
  EXPECT_EQ(symmetric_top_analytic(l0, p, 0.0), l0);
  EXPECT_DOUBLE_EQ(precession_frequency(1.0, p), 0.5);
  const Point l = symmetric_top_analytic(l0, p, kPi);
  EXPECT_NEAR(l[0], 0, 1e-15);
  EXPECT_NEAR(l[1], -1, 1e-15);
  EXPECT_EQ(l[2], 1.0);
  Sampler rng(1);
  const Point a{0.3, -1.4, 0.9};
  for (int i = 0; i < 50; ++i) {
    const Point b = symmetric_top_analytic(a, p, rng.uniform(-30, 30));
    EXPECT_NEAR(std::hypot(b[0], b[1], b[2]), std::hypot(a[0], a[1], a[2]), 1e-14);
    EXPECT_EQ(b[2], a[2]);
  }
}

TEST(SymmetricTop, NumericMatchesAnalytic) {
  const TopParams p{2, 1};
  const BuiltinSystem sys = make_builtin_system("symmetric_top", {{"I1", 2}, {"I3", 1}});
  const Point l0{1, 0, 1};
  const Trajectory t = integrate(sys.rhs, l0, {Method::Rk4, 1e-3, 20.0});
  double worst = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point a = symmetric_top_analytic(l0, p, t.times[i]);
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(a[k] - t.states[i][k]));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(DriftReport, Examples) {
  Trajectory t;
  t.times = {0, 1, 2};
  t.states = {{0}, {0}, {0}};
  t.invariant_names = {"c", "v"};
  t.invariant_logs = {{3, 3, 3}, {1, 1 + 1e-9, 1 - 2e-9}};
  const auto r = drift_report(t);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].name, "c");
  EXPECT_EQ(r[0].max_drift, 0.0);
  EXPECT_EQ(r[0].final_drift, 0.0);
  EXPECT_NEAR(r[1].max_drift, 2e-9, 1e-15);
  EXPECT_NEAR(r[1].final_drift, 2e-9, 1e-15);
}

TEST(DriftReport, MatchesTrajectoryDrift) {
  const BuiltinSystem sys = make_builtin_system("rigid_body", {});
  const Trajectory t = integrate(sys.rhs, Point{1, 1, 1}, {Method::Rk4, 1e-2, 5.0},
                                 sys.invariants);
  const auto r = drift_report(t);
  ASSERT_EQ(r.size(), t.drift.size());
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i].max_drift, t.drift[i]);
}

TEST(BuiltinSystems, Catalogue) {
  const auto names = builtin_system_names();
  EXPECT_EQ(names.size(), 4u);
  for (const auto& n : names) {
    const BuiltinSystem s = make_builtin_system(n, {});
    EXPECT_EQ(s.name, n);
    EXPECT_EQ(s.default_state.size(), s.space.dim());
    EXPECT_FALSE(s.invariants.empty());
  }
  EXPECT_THROW(make_builtin_system("pendulum", {}), DomainError);
  EXPECT_THROW(make_builtin_system("rigid_body", {{"I4", 1}}), DomainError);
  EXPECT_THROW(make_builtin_system("rigid_body", {{"I1", -1}}), DomainError);
}

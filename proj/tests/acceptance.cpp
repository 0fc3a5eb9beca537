#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nambu/action_angle.hpp"
#include "nambu/bracket.hpp"
#include "nambu/dynamics.hpp"
#include "nambu/reduction.hpp"
#include "nambu/sampling.hpp"
#include "nambu/systems.hpp"

using namespace nambu;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const char* fmt, double value, double limit) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, value, limit);
    lines.push_back(std::string(ok ? "    ok    " : "    FAIL  ") + buf);
    pass = pass && ok;
  }
  void below(const char* what, double value, double limit) {
    const std::string fmt = std::string(what) + " = %.3e (limit %.0e)";
    check(value < limit, fmt.c_str(), value, limit);
  }
  void note(const std::string& s) { lines.push_back("    note  " + s); }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> body;
};

double max_abs_diff(PointView a, PointView b) {
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

double max_entry(const Matrix3& m) {
  double r = 0;
  for (const auto& row : m)
    for (double v : row) r = std::max(r, std::abs(v));
  return r;
}

Point euler_state(Sampler& rng, double band) {
  for (;;) {
    Point s = rng.uniform_point(6, -2, 2);
    if (std::abs(std::sin(s[0])) >= band) return s;
  }
}

ScalarField quadratic(Sampler& rng, const PhaseSpace& s) {
  std::array<double, 9> a;
  std::array<double, 3> b;
  for (double& v : a) v = rng.uniform(-1, 1);
  for (double& v : b) v = rng.uniform(-1, 1);
  auto value = [a, b](PointView x) {
    double r = 0;
    for (int i = 0; i < 3; ++i) {
      r += b[i] * x[i];
      for (int j = 0; j < 3; ++j) r += a[i * 3 + j] * x[i] * x[j];
    }
    return r;
  };
  auto grad = [a, b](PointView x) {
    Point g(3);
    for (int i = 0; i < 3; ++i) {
      g[i] = b[i];
      for (int j = 0; j < 3; ++j) g[i] += (a[i * 3 + j] + a[j * 3 + i]) * x[j];
    }
    return g;
  };
  return ScalarField::native(s, value, grad);
}

double bracket3(const ScalarField& a, const ScalarField& b, const ScalarField& c,
                PointView x) {
  const std::vector<ScalarField> f{a, b, c};
  return nambu_bracket(f, x).value;
}

Outcome euler_equivalence() {
  Outcome o;
  const Inertia inertia{1, 2, 3};
  const NambuSystem exact = rigid_body_system(inertia);
  const NambuSystem fd(exact.space(), {exact.hamiltonians()[0].central_difference(),
                                       exact.hamiltonians()[1].central_difference()});
  Sampler rng(1001);
  double ea = 0, ef = 0;
  for (int i = 0; i < 1000; ++i) {
    const Point x = rng.uniform_point(3, -2, 2);
    const Point e = euler_rhs(x, inertia);
    ea = std::max(ea, max_abs_diff(flow_field(exact, x), e));
    ef = std::max(ef, max_abs_diff(flow_field(fd, x), e));
  }
  o.below("analytic max |flow - euler|", ea, 1e-10);
  o.below("central-difference max |flow - euler|", ef, 1e-6);
  return o;
}

Outcome rigid_body_conservation() {
  Outcome o;
  const NambuSystem sys = rigid_body_system({1, 2, 3});
  const std::vector<NamedField> inv{{"sphere", sys.hamiltonians()[0]},
                                    {"kinetic", sys.hamiltonians()[1]}};
  const Trajectory t = integrate(sys, Point{1, 1, 1}, {Method::Rk4, 1e-3, 50.0}, inv);
  o.below("drift of |L|^2/2", t.drift[0], 1e-8);
  o.below("drift of kinetic energy", t.drift[1], 1e-8);
  return o;
}

Outcome hopf_constancy() {
  Outcome o;
  const auto space = oscillator_space();
  const MomentumMap hopf = make_hopf_map();
  std::vector<NamedField> inv;
  for (std::size_t j = 0; j < 3; ++j) inv.push_back({hopf.target().name(j), hopf.components()[j]});
  const Trajectory t = integrate(canonical_vector_field(half_square_norm(space)),
                                 Point{1, 0, 0.5, 0.2}, {Method::Rk4, 1e-3, 20.0}, inv);
  for (std::size_t j = 0; j < 3; ++j) {
    o.below(("drift of " + inv[j].name).c_str(), t.drift[j], 1e-8);
  }
  return o;
}

Outcome commutation() {
  Outcome o;
  const auto target = hopf_target_space();
  const MomentumMap am = make_angular_momentum_map().central_difference();
  const MomentumMap hopf = make_hopf_map().central_difference();
  Sampler rng(1004);
  double r_am = 0, r_body = 0, r_hopf = 0;
  for (int i = 0; i < 100; ++i) {
    const Point s = euler_state(rng, 0.2);
    r_am = std::max(r_am, max_entry(commutation_residual(am, half_square_norm(target), s)));
    r_body = std::max(r_body,
                      max_entry(commutation_residual(am, -1.0 * half_square_norm(target), s)));
    const Point z = rng.uniform_point(4, -2, 2);
    r_hopf = std::max(r_hopf,
                      max_entry(commutation_residual(hopf, -4.0 * half_square_norm(target), z)));
  }
  o.below("angular momentum vs eps_jkl x_l", r_am, 1e-6);
  o.below("hopf vs H2 = -2|x|^2", r_hopf, 1e-6);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "angular momentum vs -eps_jkl x_l (H2 = -|x|^2/2): %.3e; the map "
                "closes as {L1,L2} = -L3",
                r_body);
  o.note(buf);
  return o;
}

Outcome wedge_identities() {
  Outcome o;
  Sampler rng(1005);
  double a = 0, b = 0;
  for (int i = 0; i < 100; ++i) {
    const Point p{rng.uniform(0.1, 2), rng.uniform(0.1, 2), rng.uniform(0, 2 * kPi),
                  rng.uniform(0, 2 * kPi)};
    a = std::max(a, wedge_identity_residual(WedgeIdentity::HopfR1R2, p));
    const Point q{rng.uniform(0.1, 2), rng.uniform(0.05, kPi - 0.05), rng.uniform(0, 2 * kPi),
                  rng.uniform(0, 2 * kPi)};
    b = std::max(b, wedge_identity_residual(WedgeIdentity::HopfSpherical, q));
  }
  o.below("8 r1 r2 (r1^2 + r2^2) residual", a, 1e-5);
  o.below("r^2 sin(theta) residual", b, 1e-5);
  return o;
}

Outcome dhat_agreement() {
  Outcome o;
  const MomentumMap hopf = make_hopf_map();
  Sampler rng(1006);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Point z = rng.uniform_point(4, -2, 2);
    const auto a = dhat(hopf, z), b = jacobian_minor_form(hopf, z);
    worst = std::max(worst, max_abs_diff(a.components, b.components));
  }
  o.below("max |dhat - minors|", worst, 1e-8);
  return o;
}

Outcome symmetric_top() {
  Outcome o;
  const TopParams p{2, 1};
  const Point l0{1, 0, 1};
  const NambuSystem sys = rigid_body_system({p.i1, p.i1, p.i3});
  const Trajectory t = integrate(sys, l0, {Method::Rk4, 1e-3, 20.0});
  const double omega = precession_frequency(l0[2], p);

  double traj = 0, dj = 0, dmu = 0, dphi = 0, dphi_neg = 0;
  const auto c0 = cartesian_to_spherical_aa(t.states.front());
  double phi = c0.phi, prev = c0.phi;
  for (std::size_t k = 0; k < t.size(); ++k) {
    traj = std::max(traj, max_abs_diff(t.states[k], symmetric_top_analytic(l0, p, t.times[k])));
    const auto c = cartesian_to_spherical_aa(t.states[k]);
    phi += std::remainder(c.phi - prev, 2 * kPi);
    prev = c.phi;
    dj = std::max(dj, std::abs(c.action - c0.action));
    dmu = std::max(dmu, std::abs(c.mu - c0.mu));
    dphi = std::max(dphi, std::abs(phi - c0.phi - omega * t.times[k]));
    dphi_neg = std::max(dphi_neg, std::abs(phi - c0.phi + omega * t.times[k]));
  }
  o.below("max |numeric - analytic|", traj, 1e-6);
  o.below("|J drift|", dj, 1e-7);
  o.below("|mu drift|", dmu, 1e-7);
  o.below("max |phi - phi0 - omega t|, omega = L3 (1/I3 - 1/I1)", dphi, 1e-5);
  char buf[160];
  std::snprintf(buf, sizeof buf, "omega = %.17g; max |phi - phi0 + omega t| = %.3e", omega,
                dphi_neg);
  o.note(buf);
  return o;
}

Outcome fundamental_identity() {
  Outcome o;
  const PhaseSpace s({"x1", "x2", "x3"});
  const char* pool[] = {"x1^2", "x2*x3", "x1+x3", "x2^2", "x1*x2"};
  std::vector<ScalarField> fields;
  for (const char* e : pool) fields.push_back(ScalarField::parse(e, s));
  Sampler rng(1008);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    std::array<ScalarField, 5> f{fields[rng.index(5)], fields[rng.index(5)],
                                 fields[rng.index(5)], fields[rng.index(5)],
                                 fields[rng.index(5)]};
    const Point x = rng.uniform_point(3, -1.5, 1.5);
    worst = std::max(worst, std::abs(fundamental_identity_residual(f[0], f[1], f[2], f[3], f[4], x)));
  }
  o.below("max |fundamental identity residual|", worst, 1e-4);
  return o;
}

double oscillator_error(double dt) {
  const VectorField f = [](PointView x) { return Point{x[1], -x[0]}; };
  const Trajectory t = integrate(f, Point{1, 0}, {Method::Rk4, dt, 2 * kPi});
  return std::hypot(t.states.back()[0] - 1, t.states.back()[1]);
}

Outcome bracket_algebra() {
  Outcome o;
  const PhaseSpace s({"x1", "x2", "x3"});
  const auto h1 = sphere_casimir(s);
  const auto h2 = rigid_body_kinetic(s, {1, 2, 3});
  Sampler rng(1009);
  double anti = 0, rep = 0, leib = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = quadratic(rng, s), b = quadratic(rng, s), c = quadratic(rng, s);
    const Point x = rng.uniform_point(3, -2, 2);
    const double v = bracket3(a, b, c, x);
    anti = std::max({anti, std::abs(bracket3(b, a, c, x) + v), std::abs(bracket3(a, c, b, x) + v),
                     std::abs(bracket3(c, b, a, x) + v)});
    rep = std::max({rep, std::abs(bracket3(a, a, c, x)), std::abs(bracket3(a, b, b, x)),
                    std::abs(bracket3(c, b, c, x))});
    const double lhs = bracket3(a * b, h1, h2, x);
    const double rhs = a(x) * bracket3(b, h1, h2, x) + b(x) * bracket3(a, h1, h2, x);
    leib = std::max(leib, std::abs(lhs - rhs));
  }
  o.below("antisymmetry residual", anti, 1e-10);
  o.below("repeated-argument value", rep, 1e-12);
  o.below("Leibniz residual", leib, 1e-8);
  const double ratio = oscillator_error(0.1) / oscillator_error(0.05);
  o.check(ratio > 12 && ratio < 20, "RK4 error ratio on step halving = %.3f (limit 12..%.0f)",
          ratio, 20);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Euler equivalence", 1.0, euler_equivalence},
      {2, "rigid-body conservation", 5.0, rigid_body_conservation},
      {3, "Hopf constancy", 5.0, hopf_constancy},
      {4, "commutation relations", 2.0, commutation},
      {5, "wedge identities", 1.0, wedge_identities},
      {6, "D-hat agreement", 0.0, dhat_agreement},
      {7, "symmetric top end-to-end", 5.0, symmetric_top},
      {8, "fundamental identity", 0.0, fundamental_identity},
      {9, "bracket algebra and RK4 order", 0.0, bracket_algebra},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.lines.push_back(std::string("    FAIL  exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0.0 || secs < c.time_limit;
    const bool pass = o.pass && in_time;
    if (c.time_limit > 0.0) {
      std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id,
                  c.title, secs, c.time_limit);
    } else {
      std::printf("%s criterion %d: %s (%.3f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, secs);
    }
    for (const auto& l : o.lines) std::printf("%s\n", l.c_str());
    if (!in_time) std::printf("    FAIL  runtime over limit\n");
    failed += pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

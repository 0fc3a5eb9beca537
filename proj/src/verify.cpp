#include "nambu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string_view>

#include "nambu/action_angle.hpp"
#include "nambu/bracket.hpp"
#include "nambu/errors.hpp"
#include "nambu/reduction.hpp"
#include "nambu/sampling.hpp"
#include "nambu/systems.hpp"
#include "nambu/trajectory_io.hpp"

namespace nambu {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::table() const {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %7s  %12s  %9s  %s\n",
                static_cast<int>(width), "check", "samples", "max_residual",
                "tolerance", "result");
  out += line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-*s  %7zu  %12.3e  %9.1e  %s\n",
                  static_cast<int>(width), c.name.c_str(), c.samples,
                  c.max_residual, c.tolerance, c.pass ? "PASS" : "FAIL");
    out += line;
  }
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

using SampleFn = std::function<double(Sampler&)>;

struct CheckDef {
  std::string name;
  double tolerance;
  std::string domain;
  SampleFn residual;
  std::size_t max_samples = 0;  // 0: use the requested count
};

double relative(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// c + b.x + 1/2 x^T A x with symmetric A, analytic gradient.
ScalarField random_quadratic(Sampler& rng, const PhaseSpace& space) {
  const std::size_t n = space.dim();
  const double c = rng.uniform(-1, 1);
  Point b = rng.uniform_point(n, -1, 1);
  std::vector<Point> a(n, Point(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a[i][j] = a[j][i] = rng.uniform(-1, 1);
  }
  return ScalarField::native(
      space,
      [c, b, a](PointView x) {
        double v = c;
        for (std::size_t i = 0; i < x.size(); ++i) {
          v += b[i] * x[i];
          for (std::size_t j = 0; j < x.size(); ++j) {
            v += 0.5 * x[i] * a[i][j] * x[j];
          }
        }
        return v;
      },
      [b, a](PointView x) {
        Point g = b;
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (std::size_t j = 0; j < x.size(); ++j) g[i] += a[i][j] * x[j];
        }
        return g;
      });
}

double bracket3(const ScalarField& a, const ScalarField& b,
                const ScalarField& c, PointView x) {
  return nambu_bracket(std::vector<ScalarField>{a, b, c}, x).value;
}

double max_abs(const Point& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Point non_singular_euler_state(Sampler& rng, double band = 1e-3) {
  for (;;) {
    Point s = rng.uniform_point(6, -2, 2);
    if (std::abs(std::sin(s[0])) >= band) return s;
  }
}

// Central-difference truncation error of the Euler-angle map grows like
// h^2 / sin(theta)^4; finite-difference checks stay this far from the pole.
constexpr double kFdGimbalBand = 0.2;

const Inertia kRigid{1.0, 2.0, 3.0};

std::vector<CheckDef> bracket_checks() {
  std::vector<CheckDef> checks;
  const PhaseSpace l_space = angular_momentum_space();
  const std::string cube = "x uniform in [-2,2]^3";

  checks.push_back({"bracket.antisymmetry", 1e-10,
                    cube + ", random quadratic fields", [l_space](Sampler& rng) {
                      const auto f = random_quadratic(rng, l_space);
                      const auto g = random_quadratic(rng, l_space);
                      const auto h = random_quadratic(rng, l_space);
                      const Point x = rng.uniform_point(3, -2, 2);
                      const double b = bracket3(f, g, h, x);
                      return std::max({std::abs(bracket3(g, f, h, x) + b),
                                       std::abs(bracket3(h, g, f, x) + b),
                                       std::abs(bracket3(f, h, g, x) + b)});
                    }});
  checks.push_back({"bracket.repeated_argument", 1e-12,
                    cube + ", random quadratic fields", [l_space](Sampler& rng) {
                      const auto f = random_quadratic(rng, l_space);
                      const auto g = random_quadratic(rng, l_space);
                      const Point x = rng.uniform_point(3, -2, 2);
                      return std::max(std::abs(bracket3(f, f, g, x)),
                                      std::abs(bracket3(g, f, g, x)));
                    }});
  checks.push_back({"bracket.leibniz", 1e-8, cube + ", random quadratic fields",
                    [l_space](Sampler& rng) {
                      const auto f = random_quadratic(rng, l_space);
                      const auto g = random_quadratic(rng, l_space);
                      const NambuSystem sys = rigid_body_system(kRigid);
                      const auto& h = sys.hamiltonians();
                      const Point x = rng.uniform_point(3, -2, 2);
                      const double lhs = bracket3(f * g, h[0], h[1], x);
                      const double rhs = f(x) * bracket3(g, h[0], h[1], x) +
                                         g(x) * bracket3(f, h[0], h[1], x);
                      return std::abs(lhs - rhs);
                    }});
  checks.push_back({"bracket.conservation", 1e-12,
                    cube + ", rigid body I=(1,2,3)", [](Sampler& rng) {
                      const NambuSystem sys = rigid_body_system(kRigid);
                      const auto& h = sys.hamiltonians();
                      const Point x = rng.uniform_point(3, -2, 2);
                      return std::max(std::abs(bracket3(h[0], h[0], h[1], x)),
                                      std::abs(bracket3(h[1], h[0], h[1], x)));
                    }});
  checks.push_back({"bracket.poisson_nambu_2d", 1e-12,
                    "x uniform in [-2,2]^2, random quadratic fields",
                    [](Sampler& rng) {
                      const PhaseSpace plane =
                          PhaseSpace::canonical_interleaved({"q", "p"});
                      const auto f = random_quadratic(rng, plane);
                      const auto g = random_quadratic(rng, plane);
                      const Point x = rng.uniform_point(2, -2, 2);
                      return std::abs(
                          nambu_bracket(std::vector<ScalarField>{f, g}, x).value -
                          poisson_bracket(f, g, x));
                    }});
  checks.push_back({"bracket.euler_equivalence.analytic", 1e-10, cube,
                    [](Sampler& rng) {
                      const NambuSystem sys = rigid_body_system(kRigid);
                      const Point x = rng.uniform_point(3, -2, 2);
                      const Point v = flow_field(sys, x);
                      const Point e = euler_rhs(x, kRigid);
                      return max_abs({v[0] - e[0], v[1] - e[1], v[2] - e[2]});
                    }});
  checks.push_back({"bracket.euler_equivalence.finite_difference", 1e-6, cube,
                    [](Sampler& rng) {
                      const NambuSystem a = rigid_body_system(kRigid);
                      const NambuSystem sys(
                          a.space(), {a.hamiltonians()[0].central_difference(),
                                      a.hamiltonians()[1].central_difference()});
                      const Point x = rng.uniform_point(3, -2, 2);
                      const Point v = flow_field(sys, x);
                      const Point e = euler_rhs(x, kRigid);
                      return max_abs({v[0] - e[0], v[1] - e[1], v[2] - e[2]});
                    }});
  checks.push_back({"bracket.flow_orthogonality", 1e-9, cube, [](Sampler& rng) {
                      const NambuSystem sys = rigid_body_system(kRigid);
                      const Point x = rng.uniform_point(3, -2, 2);
                      const Point v = flow_field(sys, x);
                      double worst = 0.0;
                      for (const auto& h : sys.hamiltonians()) {
                        const Point g = h.gradient(x);
                        worst = std::max(
                            worst, std::abs(v[0] * g[0] + v[1] * g[1] + v[2] * g[2]));
                      }
                      return worst;
                    }});
  checks.push_back(
      {"bracket.fundamental_identity", 1e-4,
       "x uniform in [-1.5,1.5]^3, fields drawn from {x1^2, x2*x3, x1+x3, "
       "x2^2, x1*x2}, nested central differences",
       [](Sampler& rng) {
         const PhaseSpace s({"x1", "x2", "x3"});
         static const char* kPool[] = {"x1^2", "x2*x3", "x1+x3", "x2^2",
                                       "x1*x2"};
         std::vector<ScalarField> f;
         for (int i = 0; i < 5; ++i) f.push_back(ScalarField::parse(kPool[rng.index(5)], s));
         const Point x = rng.uniform_point(3, -1.5, 1.5);
         return std::abs(fundamental_identity_residual(f[0], f[1], f[2], f[3], f[4], x));
       },
       50});
  checks.push_back({"fields.gradient_consistency", 1e-6,
                    "x uniform in [-2,2]^N, shipped analytic fields (relative)",
                    [](Sampler& rng) {
                      const PhaseSpace l = angular_momentum_space();
                      const MomentumMap hopf = make_hopf_map();
                      std::vector<ScalarField> fields{
                          sphere_casimir(l), rigid_body_kinetic(l, kRigid),
                          half_square_norm(hopf.source())};
                      for (const auto& c : hopf.components()) fields.push_back(c);
                      const MomentumMap am = make_angular_momentum_map();
                      fields.push_back(am.components()[0]);
                      fields.push_back(am.components()[1]);
                      double worst = 0.0;
                      for (const auto& f : fields) {
                        const Point x = f.space().dim() == 6
                                            ? non_singular_euler_state(rng, 0.1)
                                            : rng.uniform_point(f.space().dim(), -2, 2);
                        const Point a = f.gradient(x);
                        const Point d = central_difference_gradient(f, x);
                        for (std::size_t i = 0; i < a.size(); ++i) {
                          worst = std::max(worst, relative(d[i], a[i]));
                        }
                      }
                      return worst;
                    }});
  checks.push_back(
      {"fields.parser_roundtrip", 0.0,
       "x uniform in [-2,2]^3, fixed expression corpus", [](Sampler& rng) {
         const PhaseSpace s({"L1", "L2", "L3"});
         const ParameterMap params{{"I1", 1.0}, {"I2", 2.0}, {"I3", 3.0}};
         static const char* kCorpus[] = {
             "0.5*(L1^2+L2^2+L3^2)", "0.5*(L1^2/I1+L2^2/I2+L3^2/I3)",
             "-L1^2*(L2-L3)/(1+L3^2)", "2^-L1+atan2(L2,L3)*sin(L1)",
             "pow(abs(L1),1.5)-exp(-L2*L3)", "-(L1-L2)-(L3-1e-3)"};
         const auto& text = kCorpus[rng.index(std::size(kCorpus))];
         const Expression e = parse_expression(text, s, params);
         const Expression back = parse_expression(e.to_string(), s, params);
         const Point x = rng.uniform_point(3, -2, 2);
         return (e == back) ? std::abs(e.evaluate(x) - back.evaluate(x))
                            : std::numeric_limits<double>::infinity();
       }});
  return checks;
}

std::vector<CheckDef> reduction_checks() {
  std::vector<CheckDef> checks;
  const std::string euler_domain =
      "Euler-angle state uniform in [-2,2]^6 with |sin(theta)| >= 1e-3";
  const std::string euler_fd_domain =
      "Euler-angle state uniform in [-2,2]^6 with |sin(theta)| >= 0.2, "
      "central differences";
  const std::string r4 = "z uniform in [-2,2]^4";

  auto am_commutation = [](double casimir_sign) {
    return [casimir_sign](Sampler& rng) {
      const MomentumMap map = make_angular_momentum_map().central_difference();
      const ScalarField h2 =
          casimir_sign * sphere_casimir(angular_momentum_space());
      const Matrix3 r = commutation_residual(
          map, h2, non_singular_euler_state(rng, kFdGimbalBand));
      double worst = 0.0;
      for (const auto& row : r) {
        for (double v : row) worst = std::max(worst, std::abs(v));
      }
      return worst;
    };
  };
  // Literal commutation relation {x_j, x_k} = eps_jkl x_l. The Euler-angle
  // map obeys the body-frame algebra {L_j, L_k} = -eps_jkl L_l, so this
  // check reports the sign mismatch; the next one uses H2 = -|L|^2/2.
  checks.push_back({"reduction.commutation.angular_momentum", 1e-6,
                    euler_fd_domain + ", H2 = |x|^2/2", am_commutation(1.0)});
  checks.push_back({"reduction.commutation.angular_momentum_body_frame", 1e-6,
                    euler_fd_domain + ", H2 = -|x|^2/2", am_commutation(-1.0)});
  checks.push_back({"reduction.commutation.hopf", 1e-6, r4 + ", H2 = -2|x|^2",
                    [](Sampler& rng) {
                      const MomentumMap map = make_hopf_map().central_difference();
                      const ScalarField h2 =
                          -4.0 * half_square_norm(hopf_target_space());
                      const Matrix3 r =
                          commutation_residual(map, h2, rng.uniform_point(4, -2, 2));
                      double worst = 0.0;
                      for (const auto& row : r) {
                        for (double v : row) worst = std::max(worst, std::abs(v));
                      }
                      return worst;
                    }});
  checks.push_back({"reduction.conservation.rigid_body", 1e-5,
                    euler_domain + ", I=(1,2,3)", [](Sampler& rng) {
                      const MomentumMap map = make_angular_momentum_map();
                      const NambuSystem nambu = rigid_body_system(kRigid);
                      const ScalarField h0 =
                          pullback(nambu.hamiltonians()[1], map);
                      return max_abs(conservation_residual(
                          map, h0, nambu, non_singular_euler_state(rng)));
                    }});
  checks.push_back({"reduction.conservation.hopf", 1e-6,
                    r4 + ", H1 = |x|/2, H2 = -2|x|^2", [](Sampler& rng) {
                      const MomentumMap map = make_hopf_map().central_difference();
                      const PhaseSpace t = hopf_target_space();
                      const ScalarField h1 = ScalarField::native(
                          t, [](PointView x) {
                            return 0.5 * std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
                          });
                      const NambuSystem nambu(t, {h1, -4.0 * half_square_norm(t)});
                      const ScalarField h0 = half_square_norm(map.source());
                      Point z;
                      do {
                        z = rng.uniform_point(4, -2, 2);
                      } while (half_square_norm(map.source())(z) < 1e-2);
                      return max_abs(conservation_residual(map, h0, nambu, z));
                    }});
  checks.push_back({"reduction.dhat.hopf", 1e-8, r4, [](Sampler& rng) {
                      const MomentumMap map = make_hopf_map();
                      const Point z = rng.uniform_point(4, -2, 2);
                      const auto a = dhat(map, z).components;
                      const auto b = jacobian_minor_form(map, z).components;
                      double worst = 0.0;
                      for (std::size_t i = 0; i < 4; ++i) {
                        worst = std::max(worst, std::abs(a[i] - b[i]));
                      }
                      return worst;
                    }});
  checks.push_back({"reduction.dhat.product_map", 1e-8,
                    r4 + ", components (q1, p1, q1*p1)", [](Sampler& rng) {
                      const PhaseSpace s = oscillator_space();
                      const MomentumMap map(
                          s, hopf_target_space(),
                          {ScalarField::coordinate(s, 0),
                           ScalarField::coordinate(s, 1),
                           ScalarField::coordinate(s, 0) *
                               ScalarField::coordinate(s, 1)});
                      const Point z = rng.uniform_point(4, -2, 2);
                      const auto a = dhat(map, z).components;
                      const auto b = jacobian_minor_form(map, z).components;
                      double worst = 0.0;
                      for (std::size_t i = 0; i < 4; ++i) {
                        worst = std::max(worst, std::abs(a[i] - b[i]));
                      }
                      return worst;
                    }});
  checks.push_back({"reduction.hopf_norm", 1e-14, r4 + " (relative)",
                    [](Sampler& rng) {
                      const Point z = rng.uniform_point(4, -2, 2);
                      const Point x = hopf_map(z);
                      const double lhs = std::hypot(x[0], x[1], x[2]);
                      const double rhs =
                          z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3];
                      return relative(lhs, rhs);
                    }});
  checks.push_back({"reduction.angular_momentum_magnitude", 1e-10,
                    euler_domain + " (relative)", [](Sampler& rng) {
                      const Point s = non_singular_euler_state(rng);
                      const Point l = angular_momentum_map(s);
                      const double lhs = l[0] * l[0] + l[1] * l[1] + l[2] * l[2];
                      const double tilt = (s[4] - s[5] * std::cos(s[0])) / std::sin(s[0]);
                      const double rhs = s[3] * s[3] + tilt * tilt + s[5] * s[5];
                      return relative(lhs, rhs);
                    }});
  checks.push_back({"reduction.wedge.hopf_r1r2", 1e-5,
                    "r1, r2 uniform in [0.1,2], psi, sigma uniform in [0,2pi)",
                    [](Sampler& rng) {
                      const Point p{rng.uniform(0.1, 2), rng.uniform(0.1, 2),
                                    rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)};
                      return wedge_identity_residual(WedgeIdentity::HopfR1R2, p);
                    }});
  checks.push_back({"reduction.wedge.hopf_spherical", 1e-5,
                    "r uniform in [0.1,2], theta in [0.05,pi-0.05], phi, alpha "
                    "in [0,2pi)",
                    [](Sampler& rng) {
                      const Point p{rng.uniform(0.1, 2), rng.uniform(0.05, kPi - 0.05),
                                    rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)};
                      return wedge_identity_residual(WedgeIdentity::HopfSpherical, p);
                    }});
  return checks;
}

// Azimuth difference folded into (-pi, pi].
double angle_delta(double a, double b) {
  double d = std::remainder(a - b, 2.0 * kPi);
  return d;
}

// Velocity in (J, mu, phi) of the rigid-body Nambu flow at l, via the
// central-difference differential of the chart.
Point pushed_velocity(const NambuSystem& sys, const Point& l) {
  const Point v = flow_field(sys, l);
  const double h = 1e-6;
  Point up = l, down = l;
  for (std::size_t i = 0; i < 3; ++i) {
    up[i] += h * v[i];
    down[i] -= h * v[i];
  }
  const auto cu = cartesian_to_spherical_aa(up);
  const auto cd = cartesian_to_spherical_aa(down);
  return {(cu.action - cd.action) / (2 * h), (cu.mu - cd.mu) / (2 * h),
          angle_delta(cu.phi, cd.phi) / (2 * h)};
}

TopParams random_top(Sampler& rng) {
  return {rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0)};
}

Point off_axis_l(Sampler& rng) {
  for (;;) {
    Point l = rng.uniform_point(3, -2, 2);
    const double rho = std::hypot(l[0], l[1]);
    if (rho > 0.1 && std::hypot(rho, l[2]) > 0.2) return l;
  }
}

std::vector<CheckDef> action_angle_checks() {
  std::vector<CheckDef> checks;
  checks.push_back({"actionangle.planar_invariance", 1e-8,
                    "(q,p) uniform in [-2,2]^2 with q^2+p^2 >= 0.01",
                    [](Sampler& rng) {
                      Point z;
                      do {
                        z = rng.uniform_point(2, -2, 2);
                      } while (z[0] * z[0] + z[1] * z[1] < 0.01);
                      double jac[2][2];
                      for (int c = 0; c < 2; ++c) {
                        const double h = finite_difference_step(z[c]);
                        Point up = z, down = z;
                        up[c] += h;
                        down[c] -= h;
                        const auto a = planar_action_angle(up[0], up[1]);
                        const auto b = planar_action_angle(down[0], down[1]);
                        jac[0][c] = (a.action - b.action) / (2 * h);
                        jac[1][c] = angle_delta(a.angle, b.angle) / (2 * h);
                      }
                      return std::abs(jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0] - 1.0);
                    }});
  checks.push_back({"actionangle.spherical_roundtrip", 1e-12,
                    "x uniform in [-2,2]^3 with |x| >= 0.1 (relative)",
                    [](Sampler& rng) {
                      Point x;
                      do {
                        x = rng.uniform_point(3, -2, 2);
                      } while (std::hypot(x[0], x[1], x[2]) < 0.1);
                      const Point back =
                          spherical_aa_to_cartesian(cartesian_to_spherical_aa(x));
                      const double r = std::hypot(x[0], x[1], x[2]);
                      return max_abs({x[0] - back[0], x[1] - back[1], x[2] - back[2]}) / r;
                    }});
  checks.push_back({"actionangle.volume_action", 1e-12,
                    "x uniform in [-2,2]^3 with |x| >= 0.1 (relative)",
                    [](Sampler& rng) {
                      Point x;
                      do {
                        x = rng.uniform_point(3, -2, 2);
                      } while (std::hypot(x[0], x[1], x[2]) < 0.1);
                      const double h2 = sphere_casimir(angular_momentum_space())(x);
                      return relative(cartesian_to_spherical_aa(x).action,
                                      std::pow(2.0 * h2, 1.5) / 3.0);
                    }});
  checks.push_back({"actionangle.top_flow.bracket_vs_closed_form", 1e-6,
                    "J in [0.1,3], mu in [-0.95,0.95], phi in [0,2pi), I1, I3 "
                    "in [0.5,3]",
                    [](Sampler& rng) {
                      const TopParams p = random_top(rng);
                      const double j = rng.uniform(0.1, 3);
                      const double mu = rng.uniform(-0.95, 0.95);
                      const double phi = rng.uniform(0, 2 * kPi);
                      const auto a = top_reduced_flow(j, mu, phi, p);
                      const auto b = top_reduced_flow_bracket(j, mu, phi, p);
                      return max_abs({a.j_dot - b.j_dot, a.mu_dot - b.mu_dot,
                                      a.phi_dot - b.phi_dot});
                    }});
  // Reduced flow with bracket order (K1 kinetic, K2 sphere) against the
  // pushed-forward Euler flow. The order fixes the sign of phi_dot; the
  // Euler flow precesses at -L3 (1/I3 - 1/I1). The sphere-first variant
  // uses the opposite order.
  auto chart_check = [](double sign) {
    return [sign](Sampler& rng) {
      const TopParams p = random_top(rng);
      const NambuSystem sys = rigid_body_system({p.i1, p.i1, p.i3});
      const Point l = off_axis_l(rng);
      const auto c = cartesian_to_spherical_aa(l);
      const Point pushed = pushed_velocity(sys, l);
      const auto reduced = top_reduced_flow(c.action, c.mu, c.phi, p);
      return max_abs({pushed[0] - sign * reduced.j_dot,
                      pushed[1] - sign * reduced.mu_dot,
                      pushed[2] - sign * reduced.phi_dot});
    };
  };
  const std::string chart_domain =
      "L uniform in [-2,2]^3 with |(L1,L2)| > 0.1, I1, I3 in [0.5,3]";
  checks.push_back({"actionangle.top_flow.chart_consistency", 1e-5, chart_domain,
                    chart_check(1.0)});
  checks.push_back({"actionangle.top_flow.chart_consistency_sphere_first", 1e-5,
                    chart_domain, chart_check(-1.0)});
  return checks;
}

CheckResult run_check(const CheckDef& def, std::uint64_t seed,
                      std::size_t samples) {
  Sampler rng(seed ^ name_hash(def.name));
  const std::size_t n =
      def.max_samples ? std::min(samples, def.max_samples) : samples;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r;
    try {
      r = def.residual(rng);
    } catch (const Error&) {
      r = std::numeric_limits<double>::infinity();
    }
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    worst = std::max(worst, r);
  }
  return {def.name, n, worst, def.tolerance, worst <= def.tolerance, def.domain};
}

}  // namespace

VerifyReport run_verify(VerifySuite suite, std::uint64_t seed,
                        std::size_t samples) {
  if (samples == 0) throw DomainError("verify needs at least one sample");
  std::vector<CheckDef> defs;
  auto add = [&defs](std::vector<CheckDef> more) {
    for (auto& d : more) defs.push_back(std::move(d));
  };
  if (suite == VerifySuite::Brackets || suite == VerifySuite::All) {
    add(bracket_checks());
  }
  if (suite == VerifySuite::Reductions || suite == VerifySuite::All) {
    add(reduction_checks());
  }
  if (suite == VerifySuite::ActionAngle || suite == VerifySuite::All) {
    add(action_angle_checks());
  }
  VerifyReport report;
  report.seed = seed;
  report.samples = samples;
  for (const auto& d : defs) report.checks.push_back(run_check(d, seed, samples));
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace nambu

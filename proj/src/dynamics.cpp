#include "nambu/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "nambu/errors.hpp"

namespace nambu {

VectorField nambu_vector_field(NambuSystem system) {
  return [system = std::move(system)](PointView x) {
    return flow_field(system, x);
  };
}

VectorField canonical_vector_field(ScalarField hamiltonian) {
  if (!hamiltonian.space().is_canonical()) {
    throw DomainError("canonical flow needs a canonical phase space");
  }
  return [h = std::move(hamiltonian)](PointView x) {
    const Point dh = h.gradient(x);
    Point v(x.size(), 0.0);
    for (const auto& [q, p] : h.space().pairs()) {
      v[q] = dh[p];
      v[p] = -dh[q];
    }
    return v;
  };
}

void IntegratorSpec::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw DomainError("integrator dt must be positive");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("integrator t_end must be positive");
  }
  if (method == Method::Rk45 && (!(rel_tol > 0.0) || !(abs_tol > 0.0))) {
    throw DomainError("adaptive tolerances must be positive");
  }
}

namespace {

class Recorder {
 public:
  Recorder(std::span<const NamedField> invariants, Trajectory& out)
      : invariants_(invariants), out_(out) {
    for (const auto& inv : invariants_) out_.invariant_names.push_back(inv.name);
    out_.invariant_logs.resize(invariants_.size());
  }

  void record(double t, Point x) {
    for (std::size_t k = 0; k < invariants_.size(); ++k) {
      try {
        out_.invariant_logs[k].push_back(invariants_[k].field(x));
      } catch (const SingularEvaluation& e) {
        for (std::size_t i = 0; i < k; ++i) out_.invariant_logs[i].pop_back();
        throw IntegrationError("invariant '" + invariants_[k].name +
                                   "' singular: " + e.what(),
                               out_.times.empty() ? 0.0 : out_.times.back());
      }
    }
    out_.times.push_back(t);
    out_.states.push_back(std::move(x));
  }

  void finish() {
    out_.drift.clear();
    for (const auto& log : out_.invariant_logs) {
      double worst = 0.0;
      for (double v : log) worst = std::max(worst, std::abs(v - log.front()));
      out_.drift.push_back(worst);
    }
  }

 private:
  std::span<const NamedField> invariants_;
  Trajectory& out_;
};

void axpy(Point& y, double a, const Point& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Point checked(const VectorField& rhs, const Point& x, double t_last) {
  Point v;
  try {
    v = rhs(x);
  } catch (const SingularEvaluation& e) {
    throw IntegrationError(std::string("vector field singular: ") + e.what(),
                           t_last);
  }
  for (double vi : v) {
    if (!std::isfinite(vi)) {
      throw IntegrationError("vector field returned a non-finite value",
                             t_last);
    }
  }
  if (v.size() != x.size()) {
    throw DomainError("vector field dimension does not match the state");
  }
  return v;
}

Point rk4_step(const VectorField& rhs, const Point& y, double h, double t) {
  const Point k1 = checked(rhs, y, t);
  Point tmp = y;
  axpy(tmp, 0.5 * h, k1);
  const Point k2 = checked(rhs, tmp, t);
  tmp = y;
  axpy(tmp, 0.5 * h, k2);
  const Point k3 = checked(rhs, tmp, t);
  tmp = y;
  axpy(tmp, h, k3);
  const Point k4 = checked(rhs, tmp, t);
  Point next = y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    next[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return next;
}

void run_rk4(const VectorField& rhs, Point y, const IntegratorSpec& spec,
             Recorder& rec) {
  // Uniform steps that land exactly on t_end.
  const auto steps = static_cast<std::size_t>(
      std::max(1.0, std::ceil(spec.t_end / spec.dt * (1.0 - 1e-12))));
  const double h = spec.t_end / static_cast<double>(steps);
  rec.record(0.0, y);
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * h;
    y = rk4_step(rhs, y, h, t);
    const double t_next =
        n + 1 == steps ? spec.t_end : static_cast<double>(n + 1) * h;
    rec.record(t_next, y);
  }
}

// Dormand-Prince 5(4) tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
     -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// b5 - b4
constexpr double kE[7] = {35.0 / 384 - 5179.0 / 57600,
                          0.0,
                          500.0 / 1113 - 7571.0 / 16695,
                          125.0 / 192 - 393.0 / 640,
                          -2187.0 / 6784 + 92097.0 / 339200,
                          11.0 / 84 - 187.0 / 2100,
                          -1.0 / 40};

void run_rk45(const VectorField& rhs, Point y, const IntegratorSpec& spec,
              Recorder& rec) {
  constexpr double kSafety = 0.9;
  constexpr double kAlpha = 0.7 / 5.0;
  constexpr double kBeta = 0.4 / 5.0;
  constexpr double kMinFactor = 0.2;
  constexpr double kMaxFactor = 10.0;

  const std::size_t n = y.size();
  double t = 0.0;
  double h = std::min(spec.dt, spec.t_end);
  double err_prev = 1e-4;
  rec.record(t, y);

  std::array<Point, 7> k;
  k[0] = checked(rhs, y, t);
  while (t < spec.t_end) {
    bool last = false;
    if (t + h >= spec.t_end) {
      h = spec.t_end - t;
      last = true;
    }
    if (h < kMinAdaptiveStep) {
      throw IntegrationError("adaptive step underflow", t);
    }
    for (std::size_t s = 1; s < 7; ++s) {
      Point stage = y;
      for (std::size_t j = 0; j < s; ++j) axpy(stage, h * kA[s][j], k[j]);
      k[s] = checked(rhs, stage, t);
    }
    // Stage 7 is evaluated at the fifth-order solution (FSAL).
    Point y_new = y;
    for (std::size_t j = 0; j < 6; ++j) axpy(y_new, h * kA[6][j], k[j]);
    const Point k_new = checked(rhs, y_new, t);
    k[6] = k_new;

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = 0.0;
      for (std::size_t j = 0; j < 7; ++j) e += kE[j] * k[j][i];
      e *= h;
      const double scale =
          spec.abs_tol +
          spec.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      sum += (e / scale) * (e / scale);
    }
    const double err = std::sqrt(sum / static_cast<double>(n));

    if (err <= 1.0) {
      t = last ? spec.t_end : t + h;
      y = std::move(y_new);
      k[0] = k_new;
      rec.record(t, y);
      double factor =
          err == 0.0 ? kMaxFactor
                     : kSafety * std::pow(err, -kAlpha) * std::pow(err_prev, kBeta);
      factor = std::clamp(factor, kMinFactor, kMaxFactor);
      h *= factor;
      err_prev = std::max(err, 1e-4);
    } else {
      const double factor =
          std::max(kMinFactor, kSafety * std::pow(err, -1.0 / 5.0));
      h *= factor;
    }
  }
}

}  // namespace

Trajectory integrate(const VectorField& rhs, PointView x0,
                     const IntegratorSpec& spec,
                     std::span<const NamedField> invariants) {
  spec.validate();
  if (x0.empty()) throw DomainError("empty initial state");
  Trajectory out;
  Recorder rec(invariants, out);
  Point y(x0.begin(), x0.end());
  if (spec.method == Method::Rk4) {
    run_rk4(rhs, std::move(y), spec, rec);
  } else {
    run_rk45(rhs, std::move(y), spec, rec);
  }
  rec.finish();
  return out;
}

Trajectory integrate(const NambuSystem& system, PointView x0,
                     const IntegratorSpec& spec,
                     std::span<const NamedField> invariants) {
  require_dim(system.space(), x0);
  return integrate(nambu_vector_field(system), x0, spec, invariants);
}

Point euler_rhs(PointView l, const Inertia& inertia) {
  if (l.size() != 3) throw DomainError("angular momentum has three components");
  for (double i : inertia) {
    if (!(i > 0.0)) throw DomainError("moments of inertia must be positive");
  }
  const double l12 = l[0] * l[1], l23 = l[1] * l[2], l31 = l[2] * l[0];
  return {l23 / inertia[2] - l23 / inertia[1], l31 / inertia[0] - l31 / inertia[2],
          l12 / inertia[1] - l12 / inertia[0]};
}

double precession_frequency(double l3, const TopParams& params) {
  validate(params);
  return l3 * (1.0 / params.i3 - 1.0 / params.i1);
}

Point symmetric_top_analytic(PointView l0, const TopParams& params, double t) {
  if (l0.size() != 3) throw DomainError("angular momentum has three components");
  const double w = precession_frequency(l0[2], params);
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  return {l0[0] * c + l0[1] * s, -l0[0] * s + l0[1] * c, l0[2]};
}

std::vector<DriftEntry> drift_report(const Trajectory& trajectory) {
  std::vector<DriftEntry> report;
  for (std::size_t k = 0; k < trajectory.invariant_logs.size(); ++k) {
    const auto& log = trajectory.invariant_logs[k];
    if (log.empty()) throw DomainError("empty invariant log");
    double worst = 0.0;
    for (double v : log) worst = std::max(worst, std::abs(v - log.front()));
    report.push_back(
        {trajectory.invariant_names[k], worst, std::abs(log.back() - log.front())});
  }
  return report;
}

}  // namespace nambu

#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nambu/action_angle.hpp"
#include "nambu/bracket.hpp"
#include "nambu/scalar_field.hpp"

namespace nambu {

using VectorField = std::function<Point(PointView)>;

VectorField nambu_vector_field(NambuSystem system);
// q_dot = d_p H, p_dot = -d_q H on a canonical space.
VectorField canonical_vector_field(ScalarField hamiltonian);

struct NamedField {
  std::string name;
  ScalarField field;
};

enum class Method { Rk4, Rk45 };

struct IntegratorSpec {
  Method method = Method::Rk4;
  double dt = 1e-3;  // fixed step for rk4, initial step for rk45
  double t_end = 1.0;
  double rel_tol = 1e-10;  // rk45 only
  double abs_tol = 1e-12;  // rk45 only

  // Throws DomainError.
  void validate() const;
};

inline constexpr double kMinAdaptiveStep = 1e-12;

// States at every accepted step, starting from t = 0, with the value of each
// monitored invariant at those steps.
struct Trajectory {
  std::vector<double> times;
  std::vector<Point> states;
  std::vector<std::string> invariant_names;
  std::vector<std::vector<double>> invariant_logs;  // [invariant][step]
  std::vector<double> drift;                        // max |v(t) - v(0)|

  std::size_t size() const noexcept { return times.size(); }
  std::size_t dim() const noexcept {
    return states.empty() ? 0 : states.front().size();
  }
};

// Throws IntegrationError when the field turns singular mid-run or the
// adaptive step falls below kMinAdaptiveStep.
Trajectory integrate(const VectorField& rhs, PointView x0,
                     const IntegratorSpec& spec,
                     std::span<const NamedField> invariants = {});
Trajectory integrate(const NambuSystem& system, PointView x0,
                     const IntegratorSpec& spec,
                     std::span<const NamedField> invariants = {});

using Inertia = std::array<double, 3>;

// Euler equations in the body frame.
Point euler_rhs(PointView l, const Inertia& inertia);

// L3(0) (1/I3 - 1/I1).
double precession_frequency(double l3, const TopParams& params);

// Closed-form solution of L1' = w L2, L2' = -w L1, L3' = 0.
Point symmetric_top_analytic(PointView l0, const TopParams& params, double t);

struct DriftEntry {
  std::string name;
  double max_drift;
  double final_drift;
};

std::vector<DriftEntry> drift_report(const Trajectory& trajectory);

}  // namespace nambu

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nambu/dynamics.hpp"
#include "nambu/expression.hpp"
#include "nambu/reduction.hpp"

namespace nambu {

// 1/2 (L1^2 + L2^2 + L3^2), analytic gradient.
ScalarField sphere_casimir(const PhaseSpace& space);
// 1/2 (L1^2/I1 + L2^2/I2 + L3^2/I3), analytic gradient.
ScalarField rigid_body_kinetic(const PhaseSpace& space, const Inertia& inertia);
// Nambu system (1/2 |L|^2, kinetic) on (L1, L2, L3).
NambuSystem rigid_body_system(const Inertia& inertia);
// 1/2 |z|^2 on any space, analytic gradient.
ScalarField half_square_norm(const PhaseSpace& space);

// A system ready to integrate, with the quantities it is expected to conserve.
struct BuiltinSystem {
  std::string name;
  PhaseSpace space;
  VectorField rhs;
  std::optional<NambuSystem> nambu;
  std::vector<NamedField> invariants;
  Point default_state;
  IntegratorSpec default_integrator;
  ParameterMap params;  // resolved values, visible to expressions on `space`
};

std::vector<std::string> builtin_system_names();

// Known parameters: rigid_body {I1, I2, I3}, symmetric_top {I1, I3}.
// Throws DomainError for unknown names or parameters.
BuiltinSystem make_builtin_system(const std::string& name,
                                  const ParameterMap& params = {});

}  // namespace nambu

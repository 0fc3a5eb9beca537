#include "nambu/systems.hpp"

#include <numbers>
#include <set>

#include "nambu/errors.hpp"

namespace nambu {

ScalarField sphere_casimir(const PhaseSpace& space) {
  return half_square_norm(space);
}

ScalarField half_square_norm(const PhaseSpace& space) {
  return ScalarField::native(
      space,
      [](PointView x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return 0.5 * s;
      },
      [](PointView x) { return Point(x.begin(), x.end()); });
}

ScalarField rigid_body_kinetic(const PhaseSpace& space, const Inertia& inertia) {
  if (space.dim() != 3) throw DomainError("rigid body lives on R^3");
  for (double i : inertia) {
    if (!(i > 0.0)) throw DomainError("moments of inertia must be positive");
  }
  return ScalarField::native(
      space,
      [inertia](PointView l) {
        return 0.5 * (l[0] * l[0] / inertia[0] + l[1] * l[1] / inertia[1] +
                      l[2] * l[2] / inertia[2]);
      },
      [inertia](PointView l) {
        return Point{l[0] / inertia[0], l[1] / inertia[1], l[2] / inertia[2]};
      });
}

NambuSystem rigid_body_system(const Inertia& inertia) {
  const PhaseSpace space = angular_momentum_space();
  return NambuSystem(space, {sphere_casimir(space),
                             rigid_body_kinetic(space, inertia)});
}

std::vector<std::string> builtin_system_names() {
  return {"harmonic_2d", "hopf_oscillator", "rigid_body", "symmetric_top"};
}

namespace {

double param_or(const ParameterMap& params, const std::string& key,
                double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void allow_only(const ParameterMap& params, std::set<std::string> allowed,
                const std::string& system) {
  for (const auto& [k, v] : params) {
    if (!allowed.contains(k)) {
      throw DomainError("unknown parameter '" + k + "' for system " + system);
    }
  }
}

BuiltinSystem rigid_body(const ParameterMap& params) {
  allow_only(params, {"I1", "I2", "I3"}, "rigid_body");
  const Inertia inertia{param_or(params, "I1", 1.0), param_or(params, "I2", 2.0),
                        param_or(params, "I3", 3.0)};
  NambuSystem system = rigid_body_system(inertia);
  const PhaseSpace space = system.space();
  return {"rigid_body",
          space,
          nambu_vector_field(system),
          system,
          {{"H1", system.hamiltonians()[0]}, {"H2", system.hamiltonians()[1]}},
          {1.0, 1.0, 1.0},
          {Method::Rk4, 1e-3, 50.0},
          {{"I1", inertia[0]}, {"I2", inertia[1]}, {"I3", inertia[2]}}};
}

BuiltinSystem symmetric_top(const ParameterMap& params) {
  allow_only(params, {"I1", "I3"}, "symmetric_top");
  const TopParams top{param_or(params, "I1", 2.0), param_or(params, "I3", 1.0)};
  validate(top);
  NambuSystem system = rigid_body_system({top.i1, top.i1, top.i3});
  const PhaseSpace space = system.space();
  return {"symmetric_top",
          space,
          nambu_vector_field(system),
          system,
          {{"H1", system.hamiltonians()[0]},
           {"H2", system.hamiltonians()[1]},
           {"L3", ScalarField::coordinate(space, 2)}},
          {1.0, 0.0, 1.0},
          {Method::Rk4, 1e-3, 20.0},
          {{"I1", top.i1}, {"I3", top.i3}}};
}

BuiltinSystem hopf_oscillator(const ParameterMap& params) {
  allow_only(params, {}, "hopf_oscillator");
  const MomentumMap hopf = make_hopf_map();
  const PhaseSpace space = hopf.source();
  std::vector<NamedField> invariants;
  for (std::size_t j = 0; j < 3; ++j) {
    invariants.push_back({hopf.target().name(j), hopf.components()[j]});
  }
  invariants.push_back({"H0", half_square_norm(space)});
  return {"hopf_oscillator",
          space,
          canonical_vector_field(half_square_norm(space)),
          std::nullopt,
          std::move(invariants),
          {1.0, 0.0, 0.5, 0.2},
          {Method::Rk4, 1e-3, 20.0},
          {}};
}

BuiltinSystem harmonic_2d(const ParameterMap& params) {
  allow_only(params, {}, "harmonic_2d");
  const PhaseSpace space = PhaseSpace::canonical_interleaved({"q", "p"});
  const ScalarField h = half_square_norm(space);
  return {"harmonic_2d",
          space,
          canonical_vector_field(h),
          std::nullopt,
          {{"H", h}},
          {1.0, 0.0},
          {Method::Rk4, 1e-3, 2.0 * std::numbers::pi},
          {}};
}

}  // namespace

BuiltinSystem make_builtin_system(const std::string& name,
                                  const ParameterMap& params) {
  if (name == "rigid_body") return rigid_body(params);
  if (name == "symmetric_top") return symmetric_top(params);
  if (name == "hopf_oscillator") return hopf_oscillator(params);
  if (name == "harmonic_2d") return harmonic_2d(params);
  throw DomainError("unknown builtin system '" + name + "'");
}

}  // namespace nambu

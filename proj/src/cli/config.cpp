#include <json.hpp>

#include "nambu/cli.hpp"
#include "nambu/errors.hpp"

namespace nambu::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

double number_at(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing '") + key + "'");
  if (!j[key].is_number()) fail(std::string("'") + key + "' must be a number");
  return j[key].get<double>();
}

ParameterMap parse_params(const json& j) {
  ParameterMap params;
  if (j.is_null()) return params;
  if (!j.is_object()) fail("'params' must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) fail("parameter '" + k + "' must be a number");
    params[k] = v.get<double>();
  }
  return params;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string("'") + what + "' must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(std::string("'") + what + "' entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

BuiltinSystem custom_system(const json& j) {
  if (!j.is_object()) fail("custom system must be an object");
  if (!j.contains("coords")) fail("custom system needs 'coords'");
  const auto coords = string_list(j["coords"], "coords");
  const ParameterMap params = parse_params(j.value("params", json()));
  // false, true (= "interleaved") or "blocked".
  std::string layout = "none";
  if (j.contains("canonical")) {
    const json& c = j["canonical"];
    if (c.is_boolean()) {
      layout = c.get<bool>() ? "interleaved" : "none";
    } else if (c.is_string()) {
      layout = c.get<std::string>();
      if (layout != "interleaved" && layout != "blocked") {
        fail("'canonical' must be true, false, \"interleaved\" or \"blocked\"");
      }
    } else {
      fail("'canonical' must be a boolean or a layout name");
    }
  }
  const bool canonical = layout != "none";

  BuiltinSystem sys{"custom", PhaseSpace({"_a", "_b"}), {}, std::nullopt, {}, {}, {}, params};
  try {
    sys.space = layout == "interleaved" ? PhaseSpace::canonical_interleaved(coords)
                : layout == "blocked"   ? PhaseSpace::canonical_blocked(coords)
                                        : PhaseSpace(coords);
  } catch (const DomainError& e) {
    fail(e.what());
  }

  std::vector<std::string> hams;
  if (j.contains("hamiltonians")) {
    hams = string_list(j["hamiltonians"], "hamiltonians");
  } else if (j.contains("hamiltonian") && j["hamiltonian"].is_string()) {
    hams.push_back(j["hamiltonian"].get<std::string>());
  } else {
    fail("custom system needs 'hamiltonians'");
  }

  std::vector<ScalarField> fields;
  for (const auto& h : hams) fields.push_back(ScalarField::parse(h, sys.space, params));

  if (canonical) {
    if (fields.size() != 1) fail("canonical custom system takes one Hamiltonian");
    sys.rhs = canonical_vector_field(fields[0]);
    sys.invariants.push_back({"H", fields[0]});
  } else {
    if (fields.size() + 1 != sys.space.dim()) {
      fail("Nambu system on " + std::to_string(sys.space.dim()) +
           " coordinates needs " + std::to_string(sys.space.dim() - 1) +
           " Hamiltonians");
    }
    std::optional<ScalarField> normalization;
    if (j.contains("normalization")) {
      if (!j["normalization"].is_string()) fail("'normalization' must be a string");
      normalization = ScalarField::parse(j["normalization"].get<std::string>(),
                                         sys.space, params);
    }
    NambuSystem nambu(sys.space, fields, normalization);
    sys.rhs = nambu_vector_field(nambu);
    sys.nambu = std::move(nambu);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      sys.invariants.push_back({"H" + std::to_string(k + 1), fields[k]});
    }
  }
  if (j.contains("invariants")) {
    if (!j["invariants"].is_object()) fail("'invariants' must be an object");
    for (const auto& [name, expr] : j["invariants"].items()) {
      if (!expr.is_string()) fail("invariant '" + name + "' must be a string");
      sys.invariants.push_back(
          {name, ScalarField::parse(expr.get<std::string>(), sys.space, params)});
    }
  }
  return sys;
}

BuiltinSystem system_from(const json& j) {
  try {
    if (j.is_string()) return make_builtin_system(j.get<std::string>());
    if (!j.is_object()) fail("'system' must be a name or an object");
    const bool builtin = j.contains("builtin");
    const bool custom = j.contains("custom");
    if (builtin == custom) fail("'system' needs exactly one of 'builtin' or 'custom'");
    if (builtin) {
      if (!j["builtin"].is_string()) fail("'builtin' must be a system name");
      return make_builtin_system(j["builtin"].get<std::string>(),
                                 parse_params(j.value("params", json())));
    }
    return custom_system(j["custom"]);
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

IntegratorSpec integrator_from(const json& j, IntegratorSpec spec) {
  if (j.is_null()) return spec;
  if (!j.is_object()) fail("'integrator' must be an object");
  if (j.contains("method")) {
    const std::string m = j["method"].get<std::string>();
    if (m == "rk4") {
      spec.method = Method::Rk4;
    } else if (m == "rk45" || m == "rk45-adaptive") {
      spec.method = Method::Rk45;
    } else {
      fail("unknown integrator method '" + m + "'");
    }
  }
  if (j.contains("dt")) spec.dt = number_at(j, "dt");
  if (j.contains("t_end")) spec.t_end = number_at(j, "t_end");
  if (j.contains("rel_tol")) spec.rel_tol = number_at(j, "rel_tol");
  if (j.contains("abs_tol")) spec.abs_tol = number_at(j, "abs_tol");
  return spec;
}

OutputSpec output_from(const json& j) {
  OutputSpec out;
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "stdout")) {
    return out;
  }
  if (!j.is_object()) fail("'output' must be \"stdout\" or an object");
  if (j.contains("path")) out.path = j["path"].get<std::string>();
  const std::string fmt = j.value("format", std::string("csv"));
  if (fmt == "csv") {
    out.format = OutputFormat::Csv;
  } else if (fmt == "jsonl") {
    out.format = OutputFormat::Jsonl;
  } else {
    fail("unknown output format '" + fmt + "'");
  }
  return out;
}

void validate(const RunConfig& cfg) {
  try {
    cfg.integrator.validate();
  } catch (const DomainError& e) {
    fail(e.what());
  }
  if (cfg.initial_state.size() != cfg.system.space.dim()) {
    fail("initial_state has " + std::to_string(cfg.initial_state.size()) +
         " components, system has " + std::to_string(cfg.system.space.dim()));
  }
}

}  // namespace

RunConfig default_run_config(const std::string& builtin_name) {
  RunConfig cfg = [&] {
    try {
      return RunConfig{make_builtin_system(builtin_name)};
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }();
  cfg.integrator = cfg.system.default_integrator;
  cfg.initial_state = cfg.system.default_state;
  return cfg;
}

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) fail("config must be a JSON object");
  if (!j.contains("system")) fail("config needs 'system'");
  try {
    RunConfig cfg{system_from(j["system"])};
    cfg.integrator = integrator_from(j.value("integrator", json()),
                                     cfg.system.default_integrator);
    if (j.contains("initial_state")) {
      if (!j["initial_state"].is_array()) fail("'initial_state' must be an array");
      cfg.initial_state = j["initial_state"].get<Point>();
    } else if (!cfg.system.default_state.empty()) {
      cfg.initial_state = cfg.system.default_state;
    } else {
      fail("custom systems need 'initial_state'");
    }
    cfg.output = output_from(j.value("output", json()));
    if (j.contains("drift_tolerance")) {
      const json& t = j["drift_tolerance"];
      if (t.is_number()) {
        cfg.default_drift_tolerance = t.get<double>();
      } else if (t.is_object()) {
        for (const auto& [k, v] : t.items()) cfg.drift_tolerances[k] = v.get<double>();
      } else {
        fail("'drift_tolerance' must be a number or an object");
      }
    }
    cfg.seed = j.value("seed", std::uint64_t{0});
    validate(cfg);
    return cfg;
  } catch (const json::exception& e) {
    fail(std::string("invalid config: ") + e.what());
  }
}

BuiltinSystem parse_system_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed config: ") + e.what());
  }
  try {
    if (j.is_object() && j.contains("system")) return system_from(j["system"]);
    return custom_system(j);
  } catch (const json::exception& e) {
    fail(std::string("invalid system: ") + e.what());
  }
}

BuiltinSystem parse_custom_system(const std::string& json_text) {
  try {
    return custom_system(json::parse(json_text));
  } catch (const json::exception& e) {
    fail(std::string("invalid custom system: ") + e.what());
  }
}

std::string report_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"samples", c.samples},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"domain", c.domain}});
  }
  json j = {{"seed", report.seed},
            {"samples", report.samples},
            {"pass", report.all_pass()},
            {"checks", checks}};
  return j.dump();
}

}  // namespace nambu::cli

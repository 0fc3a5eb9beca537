#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nambu/action_angle.hpp"
#include "nambu/cli.hpp"
#include "nambu/errors.hpp"
#include "nambu/reduction.hpp"
#include "nambu/trajectory_io.hpp"

namespace nambu::cli {

namespace {

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("nambu", sink);
  logger->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("NAMBU_LOG")) {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  return logger;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Point parse_point(const std::string& text) {
  Point x;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(std::stod(cell, &used));
      if (cell.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(cell);
      }
    } catch (const std::logic_error&) {
      throw ConfigError("malformed point component '" + cell + "'");
    }
  }
  if (x.empty()) throw ConfigError("empty point");
  return x;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "jsonl") return OutputFormat::Jsonl;
  throw ConfigError("unknown format '" + name + "'");
}

void write_trajectory(const Trajectory& t, const std::vector<std::string>& names,
                      const OutputSpec& spec, std::ostream& out) {
  auto emit = [&](std::ostream& os) {
    if (spec.format == OutputFormat::Csv) {
      write_csv(t, names, os);
    } else {
      write_jsonl(t, names, os);
    }
  };
  if (!spec.path) {
    emit(out);
    return;
  }
  std::ofstream file(*spec.path);
  if (!file) throw ConfigError("cannot write '" + *spec.path + "'");
  emit(file);
}

// Shared flag state of the subcommands.
struct Options {
  std::string config_path;
  std::string system_name;
  std::string point;
  std::vector<std::string> fields;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  long long samples = 100;
  std::string suite;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::string l0 = "1,0,1";
  double i1 = 2.0;
  double i3 = 1.0;
  std::string map_name;
  std::string in_path;
};

BuiltinSystem system_for_bracket(const Options& o) {
  if (!o.config_path.empty()) {
    return parse_system_config(read_file(o.config_path));
  }
  if (o.system_name.empty()) throw ConfigError("bracket needs --system or --config");
  try {
    return make_builtin_system(o.system_name);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

int cmd_bracket(const Options& o, std::ostream& out, spdlog::logger& log) {
  const BuiltinSystem sys = system_for_bracket(o);
  const Point x = parse_point(o.point);
  if (x.size() != sys.space.dim()) {
    throw ConfigError("point has " + std::to_string(x.size()) +
                      " components, system has " + std::to_string(sys.space.dim()));
  }
  std::vector<ScalarField> fields;
  for (const auto& f : o.fields) fields.push_back(ScalarField::parse(f, sys.space, sys.params));
  if (fields.size() != sys.space.dim()) {
    throw ConfigError("bracket on " + std::to_string(sys.space.dim()) +
                      " coordinates takes " + std::to_string(sys.space.dim()) +
                      " fields");
  }
  const BracketResult r = nambu_bracket(fields, x);
  log.info("derivative matrix max |entry| = {}", r.conditioning);
  out << format_double(r.value == 0.0 ? 0.0 : r.value) << '\n';
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err,
                 spdlog::logger& log) {
  RunConfig cfg = [&] {
    if (!o.config_path.empty()) return parse_run_config(read_file(o.config_path));
    if (!o.system_name.empty()) return default_run_config(o.system_name);
    throw ConfigError("simulate needs --config or --system");
  }();
  if (o.dt) cfg.integrator.dt = *o.dt;
  if (o.t_end) cfg.integrator.t_end = *o.t_end;
  if (!o.out_path.empty()) cfg.output.path = o.out_path;
  if (!o.format.empty()) cfg.output.format = parse_format(o.format);
  try {
    cfg.integrator.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  log.info("simulating {} to t = {}", cfg.system.name, cfg.integrator.t_end);
  const Trajectory t = integrate(cfg.system.rhs, cfg.initial_state,
                                 cfg.integrator, cfg.system.invariants);
  write_trajectory(t, cfg.system.space.coord_names(), cfg.output, out);

  // The trajectory owns stdout when no path is given.
  std::ostream& summary = cfg.output.path ? out : err;
  bool ok = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s  %12s  %12s  %9s  %s\n", "invariant",
                "max_drift", "final_drift", "tolerance", "result");
  summary << line;
  for (const auto& d : drift_report(t)) {
    auto it = cfg.drift_tolerances.find(d.name);
    const double tol =
        it == cfg.drift_tolerances.end() ? cfg.default_drift_tolerance : it->second;
    const bool pass = d.max_drift < tol;
    ok = ok && pass;
    std::snprintf(line, sizeof line, "%-12s  %12.3e  %12.3e  %9.1e  %s\n",
                  d.name.c_str(), d.max_drift, d.final_drift, tol,
                  pass ? "PASS" : "FAIL");
    summary << line;
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw ConfigError("--samples must be at least 1");
  VerifySuite suite = VerifySuite::All;
  if (o.suite == "brackets") {
    suite = VerifySuite::Brackets;
  } else if (o.suite == "reductions") {
    suite = VerifySuite::Reductions;
  } else if (o.suite == "actionangle") {
    suite = VerifySuite::ActionAngle;
  } else if (o.suite != "all") {
    throw ConfigError("unknown suite '" + o.suite + "'");
  }
  const VerifyReport report =
      run_verify(suite, o.seed, static_cast<std::size_t>(o.samples));
  out << "suite " << o.suite << ", seed " << o.seed << ", samples " << o.samples
      << '\n'
      << report.table();
  const std::string js = report_json(report);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw ConfigError("cannot write '" + o.out_path + "'");
    file << js << '\n';
  } else {
    out << js << '\n';
  }
  return report.all_pass() ? kOk : kVerificationFailure;
}

int cmd_top(const Options& o, std::ostream& out, spdlog::logger& log) {
  const Point l0 = parse_point(o.l0);
  if (l0.size() != 3) throw ConfigError("--L0 needs three components");
  const TopParams params{o.i1, o.i3};
  try {
    validate(params);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  IntegratorSpec spec{Method::Rk4, o.dt.value_or(1e-3), o.t_end.value_or(20.0)};
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const double omega = precession_frequency(l0[2], params);
  const NambuSystem sys = rigid_body_system({params.i1, params.i1, params.i3});
  const Trajectory t = integrate(sys, l0, spec);

  double analytic_err = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Point a = symmetric_top_analytic(l0, params, t.times[k]);
    for (std::size_t i = 0; i < 3; ++i) {
      analytic_err = std::max(analytic_err, std::abs(t.states[k][i] - a[i]));
    }
  }

  char line[256];
  auto row = [&](const char* label, double v) {
    std::snprintf(line, sizeof line, "%-28s %.17g\n", label, v + 0.0);
    out << line;
  };
  row("omega", omega);
  row("max |numeric - analytic|", analytic_err);

  const bool degenerate = l0[0] == 0.0 && l0[1] == 0.0;
  bool ok = analytic_err < 1e-5;
  if (degenerate) {
    log.warn("L0 lies on the symmetry axis: degenerate chart (azimuth "
             "undefined), reduced-chart comparison skipped");
    out << "reduced chart                degenerate (|mu| = 1), skipped\n";
  } else {
    const auto c0 = cartesian_to_spherical_aa(t.states.front());
    double phi = c0.phi;
    double prev = c0.phi;
    double phi_err = 0.0, j_drift = 0.0, mu_drift = 0.0;
    double st = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const auto c = cartesian_to_spherical_aa(t.states[k]);
      phi += std::remainder(c.phi - prev, 2.0 * std::numbers::pi);
      prev = c.phi;
      const double dphi = phi - c0.phi;
      phi_err = std::max(phi_err, std::abs(dphi - omega * t.times[k]));
      j_drift = std::max(j_drift, std::abs(c.action - c0.action));
      mu_drift = std::max(mu_drift, std::abs(c.mu - c0.mu));
      st += t.times[k];
      sp += dphi;
      stt += t.times[k] * t.times[k];
      stp += t.times[k] * dphi;
    }
    const double n = static_cast<double>(t.size());
    const double rate = (n * stp - st * sp) / (n * stt - st * st);
    row("max |J - J0|", j_drift);
    row("max |mu - mu0|", mu_drift);
    row("max |phi - phi0 - omega t|", phi_err);
    row("fitted phi rate", rate);
    ok = ok && phi_err < 1e-5;
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerificationFailure;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  MomentumMap map = [&] {
    if (o.map_name == "hopf") return make_hopf_map();
    if (o.map_name == "angular_momentum") return make_angular_momentum_map();
    throw ConfigError("unknown momentum map '" + o.map_name + "'");
  }();
  std::ifstream in(o.in_path);
  if (!in) throw ConfigError("cannot open '" + o.in_path + "'");
  CsvTable table;
  try {
    table = read_csv(in);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const std::size_t dim = map.source().dim();
  // Columns by coordinate name when present, else the ones following t.
  std::vector<std::size_t> cols;
  for (const auto& name : map.source().coord_names()) {
    auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) break;
    cols.push_back(static_cast<std::size_t>(it - table.columns.begin()));
  }
  if (cols.size() != dim) {
    if (table.columns.empty() || table.columns.front() != "t" ||
        table.columns.size() < dim + 1) {
      throw ConfigError("state file needs a 't' column and " +
                        std::to_string(dim) + " state columns");
    }
    cols.clear();
    for (std::size_t i = 0; i < dim; ++i) cols.push_back(i + 1);
  }
  Trajectory reduced;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    Point z;
    for (std::size_t c : cols) z.push_back(table.rows[k][c]);
    reduced.times.push_back(table.columns.front() == "t"
                                ? table.rows[k][0]
                                : static_cast<double>(k));
    reduced.states.push_back(map(z));
  }
  OutputSpec spec;
  if (!o.out_path.empty()) spec.path = o.out_path;
  if (!o.format.empty()) spec.format = parse_format(o.format);
  write_trajectory(reduced, map.target().coord_names(), spec, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto logger = make_logger(err);
  Options o;
  CLI::App app{"Nambu dynamics: brackets, momentum-map reductions, flows and "
               "action-angle charts"};
  app.require_subcommand(1);

  auto* bracket = app.add_subcommand("bracket", "Evaluate a Nambu bracket at a point");
  bracket->add_option("--system", o.system_name, "Builtin system name");
  bracket->add_option("--config", o.config_path, "Config file (JSON)");
  bracket->add_option("--point", o.point, "Comma-separated point")->required();
  bracket->add_option("fields", o.fields, "Field expressions")->required();

  auto* simulate = app.add_subcommand("simulate", "Integrate a system and report drift");
  simulate->add_option("--config", o.config_path, "Config file (JSON)");
  simulate->add_option("--system", o.system_name, "Builtin system with defaults");
  simulate->add_option("--out", o.out_path, "Trajectory output path");
  simulate->add_option("--format", o.format, "csv or jsonl");
  simulate->add_option("--dt", o.dt, "Step size override");
  simulate->add_option("--t-end", o.t_end, "End time override");

  auto* verify = app.add_subcommand("verify", "Run seeded identity checks");
  verify->add_option("suite", o.suite, "brackets, reductions, actionangle or all")
      ->required();
  verify->add_option("--seed", o.seed, "Sampling seed");
  verify->add_option("--samples", o.samples, "Samples per check");
  verify->add_option("--out", o.out_path, "Write the JSON report here");

  auto* top = app.add_subcommand("top", "Free symmetric top: numeric vs analytic vs reduced chart");
  top->add_option("--L0", o.l0, "Initial angular momentum, comma-separated");
  top->add_option("--I1", o.i1, "Moment of inertia I1 = I2");
  top->add_option("--I3", o.i3, "Moment of inertia I3");
  top->add_option("--t-end", o.t_end, "End time (default 20)");
  top->add_option("--dt", o.dt, "RK4 step (default 1e-3)");

  auto* reduce = app.add_subcommand("reduce", "Apply a builtin momentum map to a state file");
  reduce->add_option("--map", o.map_name, "hopf or angular_momentum")->required();
  reduce->add_option("--in", o.in_path, "CSV state file")->required();
  reduce->add_option("--out", o.out_path, "Output path");
  reduce->add_option("--format", o.format, "csv or jsonl");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*bracket) return cmd_bracket(o, out, *logger);
    if (*simulate) return cmd_simulate(o, out, err, *logger);
    if (*verify) return cmd_verify(o, out);
    if (*top) return cmd_top(o, out, *logger);
    if (*reduce) return cmd_reduce(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IntegrationError& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeSingularity;
  } catch (const SingularEvaluation& e) {
    err << "singular evaluation: " << e.what() << '\n';
    return kRuntimeSingularity;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace nambu::cli

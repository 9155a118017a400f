// Copyright 2026 The qesd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qesd/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <optional>
#include <ostream>

#include "qesd/csv.hpp"

namespace qesd {

namespace {

struct RunConfig {
  double r = 1.0;
  double alpha = 0.0;
  double n_bath = 0.0;
  double gamma0 = 1.0;
  double t_max = 5.0;
  std::size_t steps = 101;
  std::optional<double> dt;
  double t = 0.0;
  std::string method = "analytic";
  std::string family = "phi";
  std::string out;
};

/// Validation failure tied to a command-line flag.
struct FlagError {
  std::string flag;
  std::string message;
};

[[noreturn]] void fail(std::string flag, std::string message) { throw FlagError{std::move(flag), std::move(message)}; }

std::string num(double v) { return format_number(v); }

void add_state_flags(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--r", cfg.r, "purity r, 0 <= r <= 1")->capture_default_str();
  cmd.add_option("--alpha", cfg.alpha, "initial-entanglement angle alpha in radians, finite")->capture_default_str();
  cmd.add_option("--family", cfg.family, "initial state family: phi | psi")->capture_default_str();
}

void add_bath_flags(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--n-bath", cfg.n_bath, "mean bath occupation N >= 0")->capture_default_str();
  cmd.add_option("--gamma", cfg.gamma0, "spontaneous emission rate gamma0 > 0")->capture_default_str();
}

WernerParams werner_params(const RunConfig& cfg) {
  if (!(cfg.r >= 0.0 && cfg.r <= 1.0)) fail("r", "must lie in [0, 1], got " + num(cfg.r));
  if (!std::isfinite(cfg.alpha)) fail("alpha", "must be finite");
  return {cfg.r, cfg.alpha};
}

BathParams bath_params(const RunConfig& cfg) {
  if (!(cfg.n_bath >= 0.0) || !std::isfinite(cfg.n_bath)) fail("n-bath", "must be >= 0, got " + num(cfg.n_bath));
  if (!(cfg.gamma0 > 0.0) || !std::isfinite(cfg.gamma0)) fail("gamma", "must be > 0, got " + num(cfg.gamma0));
  return {cfg.n_bath, cfg.gamma0};
}

Family family(const RunConfig& cfg) {
  if (cfg.family == "phi") return Family::phi;
  if (cfg.family == "psi") return Family::psi;
  fail("family", "must be phi or psi, got " + cfg.family);
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_text_file(path, contents);
  }
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
  const WernerParams p = werner_params(cfg);
  const BathParams b = bath_params(cfg);
  const Family f = family(cfg);
  if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) fail("t-max", "must be > 0, got " + num(cfg.t_max));
  if (cfg.steps < 2) fail("steps", "must be >= 2");
  if (cfg.method != "analytic" && cfg.method != "rk4") fail("method", "must be analytic or rk4, got " + cfg.method);
  const bool rk4 = cfg.method == "rk4";
  const double dt = cfg.dt.value_or(1e-4);
  const auto times = linspace(0.0, cfg.t_max, cfg.steps);
  if (rk4) {
    if (!(dt > 0.0)) fail("dt", "must be > 0, got " + num(dt));
    if (dt > (times[1] - times[0]) / 10.0) fail("dt", "must not exceed a tenth of the output spacing");
  }

  CsvBuilder csv({"t", "x", "y", "z", "w", "re_u", "im_u", "re_v", "im_v", "concurrence"});
  const auto add_row = [&csv](double t, const XState& s, double c) {
    csv.row({t, s.x, s.y, s.z, s.w, s.u.real(), s.u.imag(), s.v.real(), s.v.imag(), c});
  };
  if (rk4) {
    DensityMatrix rho = to_density_matrix(werner(p, f));
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (k > 0) rho = propagate_rk4(rho, b, times[k] - times[k - 1], dt);
      add_row(times[k], from_density_matrix(rho), concurrence_general(rho));
    }
  } else {
    for (double t : times) {
      const XState s = propagate_analytic(p, b, t, f);
      add_row(t, s, concurrence_x(s));
    }
  }
  emit(cfg.out, csv.str(), out);
  return kExitOk;
}

int cmd_concurrence(const RunConfig& cfg, std::ostream& out) {
  const WernerParams p = werner_params(cfg);
  const BathParams b = bath_params(cfg);
  const Family f = family(cfg);
  if (!(cfg.t >= 0.0) || !std::isfinite(cfg.t)) fail("t", "must be >= 0, got " + num(cfg.t));
  if (cfg.method != "x" && cfg.method != "general") fail("method", "must be x or general, got " + cfg.method);
  const XState s = propagate_analytic(p, b, cfg.t, f);
  const double c = cfg.method == "x" ? concurrence_x(s) : concurrence_general(to_density_matrix(s));
  out << "concurrence=" << num(c) << '\n';
  return kExitOk;
}

int cmd_esd_time(const RunConfig& cfg, std::ostream& out) {
  const EsdReport report = esd_time(werner_params(cfg), bath_params(cfg), family(cfg));
  if (report.classification == EsdClass::esd) {
    out << "esd gamma0_t=" << num(*report.gamma0_t_star) << '\n';
  } else {
    out << "no-esd reason=" << to_string(report.classification) << '\n';
  }
  return kExitOk;
}

std::filesystem::path boundaries_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_filename(out.stem().string() + "_boundaries" + out.extension().string());
  return p;
}

int cmd_region(const RunConfig& cfg, std::size_t grid, std::ostream& out) {
  const BathParams b = bath_params(cfg);
  if (grid < 2) fail("grid", "must be >= 2");
  if (cfg.out.empty() || cfg.out == "-") fail("out", "region needs a file path");

  const auto alphas = linspace(0.0, 2.0 * M_PI, grid);
  const auto rs = linspace(0.0, 1.0, grid);
  write_csv(region_map(alphas, rs, b), cfg.out);
  out << "wrote " << cfg.out << '\n';
  if (b.n_bath == 0.0) {
    CsvBuilder curves({"alpha", "r_lo", "r_hi"});
    for (double a : alphas) curves.row({a, phi_entanglement_threshold(a), vacuum_esd_ceiling(a)});
    const auto companion = boundaries_path(cfg.out);
    write_text_file(companion, curves.str());
    out << "wrote " << companion.string() << '\n';
  }
  return kExitOk;
}

struct SweepFlags {
  std::string vary;
  double from = 0.0;
  double to = 1.0;
  std::size_t points = 101;
};

int cmd_sweep(const RunConfig& cfg, const SweepFlags& flags, std::ostream& out) {
  SweepSpec spec;
  try {
    spec.vary = parse_sweep_axis(flags.vary);
  } catch (const ParameterError& e) {
    fail("vary", e.what());
  }
  spec.lo = flags.from;
  spec.hi = flags.to;
  spec.points = flags.points;
  spec.family = family(cfg);
  spec.t_max = cfg.t_max;
  spec.steps = cfg.steps;
  spec.werner = {cfg.r, cfg.alpha};
  spec.bath = {cfg.n_bath, cfg.gamma0};
  if (spec.vary != SweepAxis::r) werner_params(cfg);
  RunConfig fixed_bath = cfg;
  if (spec.vary == SweepAxis::n_bath) fixed_bath.n_bath = 0.0;
  bath_params(fixed_bath);
  if (flags.points < 2) fail("points", "must be >= 2");
  if (!(flags.from < flags.to)) fail("from", "must be < --to");
  if (spec.vary == SweepAxis::r && (flags.from < 0.0 || flags.to > 1.0)) fail("from", "r range must lie in [0, 1]");
  if (spec.vary == SweepAxis::n_bath && flags.from < 0.0) fail("from", "n-bath range must be >= 0");
  if (!(cfg.t_max > 0.0)) fail("t-max", "must be > 0, got " + num(cfg.t_max));
  if (cfg.steps < 2) fail("steps", "must be >= 2");
  validate(spec);

  emit(cfg.out, to_csv(sweep_surface(spec)), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit entanglement dynamics in a thermal Markovian bath", "qesd"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::size_t grid = 101;
  SweepFlags sweep_flags;

  auto* evolve = app.add_subcommand("evolve", "Write x,y,z,w,u,v and concurrence over a time grid as CSV");
  add_state_flags(*evolve, cfg);
  add_bath_flags(*evolve, cfg);
  evolve->add_option("--t-max", cfg.t_max, "final time t_max > 0")->capture_default_str();
  evolve->add_option("--steps", cfg.steps, "number of time points >= 2, endpoints included")->capture_default_str();
  evolve->add_option("--method", cfg.method, "analytic | rk4")->capture_default_str();
  evolve->add_option("--dt", cfg.dt, "RK4 step > 0, at most a tenth of the output spacing (default 1e-4)");
  evolve->add_option("--out", cfg.out, "output CSV path (stdout when omitted)");

  auto* conc = app.add_subcommand("concurrence", "Print the concurrence at time t");
  add_state_flags(*conc, cfg);
  add_bath_flags(*conc, cfg);
  conc->add_option("--t", cfg.t, "time t >= 0")->capture_default_str();
  conc->add_option("--method", cfg.method, "x (closed form) | general (Wootters eigenvalues)");

  auto* esd = app.add_subcommand("esd-time", "Print the entanglement sudden death time in units of 1/gamma0");
  add_state_flags(*esd, cfg);
  add_bath_flags(*esd, cfg);

  auto* region = app.add_subcommand("region", "Classify the (alpha, r) plane of Phi states as CSV");
  add_bath_flags(*region, cfg);
  region->add_option("--grid", grid, "points per axis >= 2")->capture_default_str();
  region->add_option("--out", cfg.out, "output CSV path; N = 0 also writes <stem>_boundaries<ext>")->required();

  auto* sweep = app.add_subcommand("sweep", "Concurrence surface over one parameter and gamma0 t as CSV");
  add_state_flags(*sweep, cfg);
  add_bath_flags(*sweep, cfg);
  sweep->add_option("--vary", sweep_flags.vary, "n-bath | alpha | r")->required();
  sweep->add_option("--from", sweep_flags.from, "lower end of the varied range, < --to")->capture_default_str();
  sweep->add_option("--to", sweep_flags.to, "upper end of the varied range")->capture_default_str();
  sweep->add_option("--points", sweep_flags.points, "points on the varied axis >= 2")->capture_default_str();
  sweep->add_option("--t-max", cfg.t_max, "final gamma0 t > 0")->capture_default_str();
  sweep->add_option("--steps", cfg.steps, "points on the gamma0 t axis >= 2")->capture_default_str();
  sweep->add_option("--out", cfg.out, "output CSV path (stdout when omitted)");

  auto* version = app.add_subcommand("version", "Print the version");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    if (evolve->parsed()) return cmd_evolve(cfg, out);
    if (conc->parsed()) {
      if (conc->count("--method") == 0) cfg.method = "x";
      return cmd_concurrence(cfg, out);
    }
    if (esd->parsed()) return cmd_esd_time(cfg, out);
    if (region->parsed()) return cmd_region(cfg, grid, out);
    if (sweep->parsed()) return cmd_sweep(cfg, sweep_flags, out);
    if (version->parsed()) {
      out << "qesd " << kVersion << '\n';
      return kExitOk;
    }
  } catch (const FlagError& e) {
    err << "error: --" << e.flag << ": " << e.message << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace qesd

#include "mzsim/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzsim/errors.hpp"

namespace mzsim::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Evaluates f(0..n-1) on a small worker pool; results keep index order.
template <class F>
std::vector<ReportRow> parallel_rows(int n, F f) {
  std::vector<ReportRow> rows(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(n, 1));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) {
          try {
            rows[static_cast<std::size_t>(i)] = f(i);
          } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

double sweep_point(const SweepConfig& cfg, int i) {
  return cfg.from + (cfg.to - cfg.from) * i / (cfg.steps - 1);
}

void check_range(const std::string& what, double x, double lo, double hi, bool lo_open, bool hi_open) {
  const bool ok = (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  if (!ok) {
    throw DomainError(what + " = " + format_number(x) + " outside " + (lo_open ? "(" : "[") + format_number(lo) + "," +
                      format_number(hi) + (hi_open ? ")" : "]"));
  }
}

void set_param(MzParams& prm, const std::string& name, double v) {
  if (name == "p") prm.p = v;
  else if (name == "t") prm.t = v;
  else if (name == "t_r") prm.t_r = v;
  else if (name == "eta_a") prm.eta_a = v;
  else if (name == "eta_b") prm.eta_b = v;
  else if (name == "eta_s") prm.eta_s = v;
  else if (name == "eta_n") prm.eta_n = v;
  else throw DomainError("unknown parameter '" + name + "'");
}

double get_param(const MzParams& prm, const std::string& name) {
  if (name == "p") return prm.p;
  if (name == "t") return prm.t;
  if (name == "t_r") return prm.t_r;
  if (name == "eta_a") return prm.eta_a;
  if (name == "eta_b") return prm.eta_b;
  if (name == "eta_s") return prm.eta_s;
  if (name == "eta_n") return prm.eta_n;
  throw DomainError("unknown parameter '" + name + "'");
}

double optimal_t_r(double p) { return (1.0 + 2.0 * p) / (2.0 * (1.0 + p)); }

}  // namespace

void SweepConfig::validate() const {
  if (steps < 2) throw DomainError("a sweep needs at least 2 steps");
  if (phase_steps < 8) throw DomainError("phase steps must be at least 8");
  for (double x : {from, to}) {
    if (scenario == "mz") {
      if (param == "t") {
        if (x <= 0.0 || x >= 1.0)
          throw DomainError("T = " + format_number(x) +
                            " rejected: the coincidence rate vanishes at T = 0 and T = 1, so the sweep must stay inside (0,1)");
      } else if (param == "t_r") {
        check_range("T_R", x, 0.0, 1.0, false, true);
      } else if (param == "p" || param == "eta_a" || param == "eta_b") {
        check_range(param, x, 0.0, 1.0, false, false);
      } else {
        throw DomainError("parameter '" + param + "' cannot be swept for scenario mz");
      }
    } else if (scenario == "simple") {
      if (param == "eta_b") check_range("eta_b", x, 0.0, 1.0, true, false);
      else if (param == "p") check_range("p", x, 0.0, 1.0, false, false);
      else throw DomainError("parameter '" + param + "' cannot be swept for scenario simple");
    } else {
      throw DomainError("unknown sweep scenario '" + scenario + "' (expected mz or simple)");
    }
  }
  if (scenario == "mz") {
    MzParams probe = fixed;
    set_param(probe, param, from);
    if (eta_a_tracks_t && param != "eta_a") probe.eta_a = probe.eta_b * probe.t;
    if (t_r_optimal && param != "t_r") probe.t_r = optimal_t_r(probe.p);
    probe.validate(true);
  }
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config '" + path + "' is not valid JSON: " + e.what());
  }
  SweepConfig cfg;
  try {
    cfg.scenario = j.value("scenario", cfg.scenario);
    cfg.param = j.value("param", cfg.param);
    cfg.from = j.value("from", cfg.from);
    cfg.to = j.value("to", cfg.to);
    cfg.steps = j.value("steps", cfg.steps);
    cfg.out = j.value("out", cfg.out);
    cfg.phase_steps = j.value("phase_steps", cfg.phase_steps);
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        set_param(cfg.fixed, key, value.get<double>());
        if (key == "eta_a") cfg.eta_a_tracks_t = false;
        if (key == "t_r") cfg.t_r_optimal = false;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config '" + path + "' has a malformed field: " + e.what());
  }
  return cfg;
}

ReportRow mz_row(const MzParams& prm, int phase_steps) {
  const ScenarioResult r = mz_visibility(prm, phase_steps);
  const double vf = v_closed_form(prm.p, prm.eta_a, prm.eta_b, prm.t, prm.t_r);
  return {"mz", prm.p, prm.t, prm.t_r, prm.eta_a, prm.eta_b, r.visibility, vf, std::abs(r.visibility - vf),
          r.success_probability};
}

ReportRow simple_row(const std::string& scenario, double p, double eta_b, int phase_steps) {
  const ScenarioResult r = simple_model(NoiseCase::mixture(p), eta_b, phase_steps);
  const double vf = v_simple_closed_form(p, eta_b);
  return {scenario, p, kNaN, kNaN, kNaN, eta_b, r.visibility, vf, std::abs(r.visibility - vf), r.success_probability};
}

std::vector<ReportRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  return parallel_rows(cfg.steps, [&](int i) {
    const double x = sweep_point(cfg, i);
    if (cfg.scenario == "simple") {
      const double p = cfg.param == "p" ? x : cfg.fixed.p;
      const double eta_b = cfg.param == "eta_b" ? x : cfg.fixed.eta_b;
      return simple_row("simple", p, eta_b, cfg.phase_steps);
    }
    MzParams prm = cfg.fixed;
    set_param(prm, cfg.param, x);
    if (cfg.eta_a_tracks_t && cfg.param != "eta_a") prm.eta_a = prm.eta_b * prm.t;
    if (cfg.t_r_optimal && cfg.param != "t_r") prm.t_r = optimal_t_r(prm.p);
    return mz_row(prm, cfg.phase_steps);
  });
}

std::vector<ReportRow> run_nscale(int max_n, NoiseSchedule schedule) {
  if (max_n < 1 || max_n > kMaxNoisePhotons)
    throw DomainError("--max-n must lie in [1," + std::to_string(kMaxNoisePhotons) + "]");
  return parallel_rows(max_n, [&](int i) {
    const int n = i + 1;
    const NoiseScalingResult r = n_noise_scan(n, schedule);
    const double vf = v_noise_scaling(n, schedule);
    return ReportRow{"nscale-" + to_string(schedule) + "-n" + std::to_string(n), 0.0, kNaN, kNaN, kNaN, r.eta_star,
                     r.visibility, vf, std::abs(r.visibility - vf), r.success_probability};
  });
}

ReportRow run_optimize(double p, double eta_b, double t, bool simulator_objective, int phase_steps) {
  MzParams base;
  base.p = p;
  base.eta_b = eta_b;
  base.t = t;
  base.validate(true);
  VisibilityObjective objective;
  if (simulator_objective) {
    objective = [&](double eta_a, double t_r) {
      MzParams prm = base;
      prm.eta_a = eta_a;
      prm.t_r = t_r;
      return mz_visibility(prm, 16).visibility;
    };
  } else {
    objective = [&](double eta_a, double t_r) { return v_closed_form(p, eta_a, eta_b, t, t_r); };
  }
  const OptimumReport opt = optimize_numeric(p, objective, {eta_b, t});
  MzParams at = base;
  at.eta_a = opt.eta_a_star;
  at.t_r = opt.t_r_star;
  const double vf = v_max(p);
  return {simulator_objective ? "optimize-simulator" : "optimize-closed-form",
          p, t, opt.t_r_star, opt.eta_a_star, eta_b, opt.v_max, vf, std::abs(opt.v_max - vf),
          mz_visibility(at, phase_steps).success_probability};
}

ReportRow run_hom(double p, double t) {
  const double v = hom_dip_visibility(p, t);
  const double vf = hom_dip_visibility_closed_form(p, t);
  return {"hom", p, t, kNaN, kNaN, kNaN, v, vf, std::abs(v - vf), hom_coincidence(p, t)};
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-photon Mach-Zehnder simulator with a distinguishable noise photon"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  int phase_steps = kDefaultPhaseSteps;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: csv or json");
    sub->add_option("--out", out_path, "Output file (default: stdout)");
  };

  MzParams prm;
  prm.eta_a = kNaN;
  prm.t_r = kNaN;
  auto add_mz = [&](CLI::App* sub) {
    sub->add_option("--p", prm.p, "Indistinguishability probability");
    sub->add_option("--t", prm.t, "VRC1 transmissivity T");
    sub->add_option("--tr", prm.t_r, "VRC2 tap ratio T_R (default: optimum for p)");
    sub->add_option("--eta-a", prm.eta_a, "Upper-arm transmissivity (default: eta_b * T)");
    sub->add_option("--eta-b", prm.eta_b, "Lower-arm transmissivity");
    sub->add_option("--eta-s", prm.eta_s, "Signal coupling efficiency");
    sub->add_option("--eta-n", prm.eta_n, "Noise coupling efficiency");
    sub->add_option("--phase-steps", phase_steps, "Phase points per fringe");
  };

  auto* scenario = app.add_subcommand("scenario", "Run one scenario");
  std::string which_case = "mz";
  scenario->add_option("--case", which_case,
                       "simple-indistinguishable, simple-distinguishable, simple-mixture or mz");
  add_mz(scenario);
  add_output(scenario);

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  std::string config_path, sweep_scenario = "mz", param = "t";
  double from = 0.05, to = 0.95;
  int steps = 19;
  sweep->add_option("--config", config_path, "JSON sweep configuration");
  auto* o_scn = sweep->add_option("--scenario", sweep_scenario, "mz or simple");
  auto* o_param = sweep->add_option("--param", param, "Swept parameter: p, t, t_r, eta_a, eta_b");
  auto* o_from = sweep->add_option("--from", from, "First value");
  auto* o_to = sweep->add_option("--to", to, "Last value");
  auto* o_steps = sweep->add_option("--steps", steps, "Number of points");
  add_mz(sweep);
  add_output(sweep);

  auto* nscale = app.add_subcommand("nscale", "Visibility versus number of noise photons");
  int max_n = 4;
  std::string schedule = "simultaneous";
  nscale->add_option("--max-n", max_n, "Largest noise photon count");
  nscale->add_option("--schedule", schedule, "simultaneous or sequential");
  add_output(nscale);

  auto* optimize = app.add_subcommand("optimize", "Numerically optimize eta_a and T_R");
  std::string objective = "simulator";
  optimize->add_option("--objective", objective, "simulator or closed-form");
  add_mz(optimize);
  add_output(optimize);

  auto* hom = app.add_subcommand("hom", "Two-photon dip at the noise coupler");
  hom->add_option("--p", prm.p, "Indistinguishability probability");
  hom->add_option("--t", prm.t, "Splitter transmissivity");
  add_output(hom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    std::vector<ReportRow> rows;
    std::string path = out_path;
    ReportFormat fmt = parse_format(format);

    if (*scenario) {
      if (phase_steps < 8) throw DomainError("--phase-steps must be at least 8");
      if (which_case == "simple-indistinguishable") rows.push_back(simple_row(which_case, 1.0, prm.eta_b, phase_steps));
      else if (which_case == "simple-distinguishable") rows.push_back(simple_row(which_case, 0.0, prm.eta_b, phase_steps));
      else if (which_case == "simple-mixture") rows.push_back(simple_row(which_case, prm.p, prm.eta_b, phase_steps));
      else if (which_case == "mz") {
        if (std::isnan(prm.eta_a)) prm.eta_a = prm.eta_b * prm.t;
        if (std::isnan(prm.t_r)) prm.t_r = optimal_t_r(prm.p);
        rows.push_back(mz_row(prm, phase_steps));
      } else {
        throw DomainError("unknown case '" + which_case + "'");
      }
    } else if (*sweep) {
      SweepConfig cfg;
      if (!config_path.empty()) cfg = load_sweep_config(config_path);
      if (o_scn->count()) cfg.scenario = sweep_scenario;
      if (o_param->count()) cfg.param = param;
      if (o_from->count()) cfg.from = from;
      if (o_to->count()) cfg.to = to;
      if (o_steps->count()) cfg.steps = steps;
      const std::pair<const char*, const char*> overrides[] = {
          {"--p", "p"}, {"--t", "t"}, {"--eta-b", "eta_b"}, {"--eta-s", "eta_s"}, {"--eta-n", "eta_n"}};
      for (const auto& [flag, key] : overrides)
        if (sweep->get_option(flag)->count()) set_param(cfg.fixed, key, get_param(prm, key));
      if (!std::isnan(prm.eta_a)) {
        cfg.fixed.eta_a = prm.eta_a;
        cfg.eta_a_tracks_t = false;
      }
      if (!std::isnan(prm.t_r)) {
        cfg.fixed.t_r = prm.t_r;
        cfg.t_r_optimal = false;
      }
      if (sweep->get_option("--phase-steps")->count()) cfg.phase_steps = phase_steps;
      if (sweep->get_option("--format")->count() || config_path.empty()) cfg.format = fmt;
      if (sweep->get_option("--out")->count()) cfg.out = out_path;
      fmt = cfg.format;
      path = cfg.out;
      rows = run_sweep(cfg);
    } else if (*nscale) {
      rows = run_nscale(max_n, parse_schedule(schedule));
    } else if (*optimize) {
      if (objective != "simulator" && objective != "closed-form")
        throw DomainError("unknown objective '" + objective + "' (expected simulator or closed-form)");
      rows.push_back(run_optimize(prm.p, prm.eta_b, prm.t, objective == "simulator", phase_steps));
    } else if (*hom) {
      rows.push_back(run_hom(prm.p, prm.t));
    }

    emit_report(rows, fmt, path, out);
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace mzsim::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mzsim/analytic.hpp"
#include "mzsim/report.hpp"
#include "mzsim/scenarios.hpp"

namespace mzsim::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kValidation = 2, kIo = 3 };

/// A one-parameter sweep. Loaded from JSON with the keys
/// scenario, param, from, to, steps, params{p,t,t_r,eta_a,eta_b,eta_s,eta_n},
/// format, out, phase_steps.
struct SweepConfig {
  std::string scenario = "mz";  // "mz" or "simple"
  std::string param = "t";      // p, t, t_r, eta_a, eta_b
  double from = 0.05;
  double to = 0.95;
  int steps = 19;
  MzParams fixed;
  bool eta_a_tracks_t = true;  // eta_a = eta_b * T at every point unless set
  bool t_r_optimal = true;     // T_R = (1+2p)/(2(1+p)) at every point unless set
  ReportFormat format = ReportFormat::csv;
  std::string out;
  int phase_steps = kDefaultPhaseSteps;

  void validate() const;
};

SweepConfig load_sweep_config(const std::string& path);

ReportRow mz_row(const MzParams& params, int phase_steps);
ReportRow simple_row(const std::string& scenario, double p, double eta_b, int phase_steps);
std::vector<ReportRow> run_sweep(const SweepConfig& cfg);
std::vector<ReportRow> run_nscale(int max_n, NoiseSchedule schedule);
ReportRow run_optimize(double p, double eta_b, double t, bool simulator_objective, int phase_steps);
ReportRow run_hom(double p, double t);

/// Entry point shared by the executable and the tests.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mzsim::cli

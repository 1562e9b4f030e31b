#include "mzsim/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "mzsim/errors.hpp"
#include "mzsim/golden_section.hpp"

namespace mzsim {
namespace {

void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(name) + " must lie in [0,1]");
}

double checked(double v) {
  if (!std::isfinite(v)) throw DomainError("objective returned a non-finite value");
  return v;
}

}  // namespace

double v_closed_form(double p, double eta_a, double eta_b, double t, double t_r) {
  require_unit(p, "p");
  require_unit(eta_a, "eta_a");
  require_unit(eta_b, "eta_b");
  require_unit(t, "T");
  require_unit(t_r, "T_R");
  const double x = eta_b * t * (1.0 - t_r);
  const double k = 2.0 * (1.0 + p);
  const double den = eta_a + k * x;
  if (!(den > 0.0)) throw DomainError("visibility formula has a zero denominator");
  return k * std::sqrt(eta_a * x) / den;
}

double v_max(double p) {
  require_unit(p, "p");
  return std::sqrt((1.0 + p) / 2.0);
}

double v_simple_closed_form(double p, double eta_b) {
  require_unit(p, "p");
  if (!(eta_b > 0.0 && eta_b <= 1.0)) throw DomainError("eta_b must lie in (0,1]");
  const double k = 2.0 * (1.0 + p);
  return k * std::sqrt(eta_b) / (1.0 + k * eta_b);
}

std::string to_string(NoiseSchedule s) {
  return s == NoiseSchedule::simultaneous ? "simultaneous" : "sequential";
}

NoiseSchedule parse_schedule(const std::string& s) {
  if (s == "simultaneous") return NoiseSchedule::simultaneous;
  if (s == "sequential") return NoiseSchedule::sequential;
  throw DomainError("unknown schedule '" + s + "' (expected simultaneous or sequential)");
}

double v_noise_scaling(int n, NoiseSchedule schedule) {
  if (n < 1) throw DomainError("noise photon count must be at least 1");
  return schedule == NoiseSchedule::simultaneous ? 1.0 / std::sqrt(n + 1.0) : std::pow(0.5, 0.5 * n);
}

double hom_dip_visibility_closed_form(double p, double t) {
  require_unit(p, "p");
  require_unit(t, "T");
  const double distinguishable = t * t + (1.0 - t) * (1.0 - t);
  const double bunched = (2.0 * t - 1.0) * (2.0 * t - 1.0);
  return p * (1.0 - bunched / distinguishable);
}

OptimumReport optimal_params(double p, double eta_b, double t) {
  require_unit(eta_b, "eta_b");
  require_unit(t, "T");
  OptimumReport r;
  r.t_r_star = (1.0 + 2.0 * p) / (2.0 * (1.0 + p));
  r.eta_a_star = eta_b * t;
  r.v_max = v_max(p);
  r.method = OptimumMethod::closed_form;
  r.ridge_eta_a = r.eta_a_star;
  r.ridge_t_r = r.t_r_star;
  r.ridge_v_max = r.v_max;
  return r;
}

OptimumReport optimize_numeric(double p, const VisibilityObjective& objective, ConstraintLine line,
                               NumericOptions opts) {
  require_unit(p, "p");
  require_unit(line.eta_b, "eta_b");
  require_unit(line.t, "T");
  if (opts.grid < 2) throw DomainError("grid must have at least 2 cells per axis");
  const double lo = opts.margin;
  const double hi = 1.0 - opts.margin;
  const double cell = 1.0 / opts.grid;
  auto center = [&](int i) { return (i + 0.5) * cell; };

  OptimumReport r;
  r.method = OptimumMethod::numeric;

  // Coarse scan, T_R-major so that the first strict maximum has the smallest T_R.
  double best = -1.0;
  for (int j = 0; j < opts.grid; ++j) {
    for (int i = 0; i < opts.grid; ++i) {
      const double v = checked(objective(center(i), center(j)));
      if (v > best) {
        best = v;
        r.ridge_eta_a = center(i);
        r.ridge_t_r = center(j);
      }
    }
  }

  // Coordinate-wise refinement. Each line search spans the whole axis: the
  // objective is unimodal along either coordinate.
  double ea = r.ridge_eta_a, tr = r.ridge_t_r;
  for (int sweep = 0; sweep < 50; ++sweep) {
    const auto along_a = golden_section_maximize([&](double x) { return checked(objective(x, tr)); }, lo, hi, opts.tol);
    const auto along_r = golden_section_maximize([&](double x) { return checked(objective(along_a.argmax, x)); }, lo, hi, opts.tol);
    const double moved = std::max(std::abs(along_a.argmax - ea), std::abs(along_r.argmax - tr));
    const double gained = along_r.value - best;
    if (along_r.value > best) {
      best = along_r.value;
      ea = along_a.argmax;
      tr = along_r.argmax;
    }
    if (moved < opts.tol || gained < 1e-15) break;
  }
  r.ridge_eta_a = ea;
  r.ridge_t_r = tr;
  r.ridge_v_max = best;

  // Constrained search on eta_a = eta_b T: coarse scan to bracket, then golden section.
  const double eta_a = line.eta_b * line.t;
  auto on_line = [&](double x) { return checked(objective(eta_a, x)); };
  int best_j = 0;
  double best_line = -1.0;
  for (int j = 0; j < opts.grid; ++j) {
    const double v = on_line(center(j));
    if (v > best_line) {
      best_line = v;
      best_j = j;
    }
  }
  const auto refined = golden_section_maximize(on_line, std::max(lo, center(best_j) - cell),
                                               std::min(hi, center(best_j) + cell), opts.tol);
  r.t_r_star = refined.argmax;
  r.eta_a_star = eta_a;
  r.v_max = refined.value;
  return r;
}

}  // namespace mzsim

#pragma once

// Closed-form visibilities of the noisy Mach-Zehnder interferometer and a
// derivative-free optimizer used to check them against the simulator.

#include <functional>
#include <string>

namespace mzsim {

/// Conditional fringe visibility of the full interferometer with a noise
/// photon that is indistinguishable with probability p:
///   V = 2(1+p) sqrt(eta_a eta_b T (1-T_R)) / (eta_a + 2(1+p) eta_b T (1-T_R))
double v_closed_form(double p, double eta_a, double eta_b, double t, double t_r);

/// sqrt((1+p)/2), reached for eta_a = eta_b T and T_R = (1+2p)/(2(1+p)).
double v_max(double p);

/// Simple two-mode model after label-blind subtraction and attenuation
/// eta_b of the lower arm: 2(1+p) sqrt(eta_b) / (1 + 2(1+p) eta_b).
double v_simple_closed_form(double p, double eta_b);

enum class NoiseSchedule { simultaneous, sequential };

std::string to_string(NoiseSchedule s);
NoiseSchedule parse_schedule(const std::string& s);

/// Optimal visibility with n distinguishable noise photons:
/// 1/sqrt(n+1) (simultaneous) or 2^(-n/2) (sequential).
double v_noise_scaling(int n, NoiseSchedule schedule);

/// Two-photon dip visibility 1 - C(p)/C(0) at a splitter of transmissivity t.
double hom_dip_visibility_closed_form(double p, double t);

enum class OptimumMethod { closed_form, numeric };

struct OptimumReport {
  double t_r_star = 0.0;
  double eta_a_star = 0.0;  // eta_b * T, the constraint the optimum is reported on
  double v_max = 0.0;
  OptimumMethod method = OptimumMethod::closed_form;
  // Unconstrained 2-D search over (eta_a, T_R). The maximum lies on a ridge
  // eta_a = 2(1+p) eta_b T (1-T_R), so only the value is meaningful here.
  double ridge_eta_a = 0.0;
  double ridge_t_r = 0.0;
  double ridge_v_max = 0.0;
};

OptimumReport optimal_params(double p, double eta_b = 1.0, double t = 0.5);

/// Fixed parameters of the line eta_a = eta_b * T.
struct ConstraintLine {
  double eta_b = 1.0;
  double t = 0.5;
};

using VisibilityObjective = std::function<double(double eta_a, double t_r)>;

struct NumericOptions {
  int grid = 64;
  double tol = 1e-6;
  double margin = 1e-4;  // keeps the search off the open ends of (0,1)
};

/// Coarse grid scan plus coordinate-wise golden-section refinement over
/// (eta_a, T_R), then a golden-section search for T_R along the constraint
/// line. Grid ties go to the smaller T_R.
OptimumReport optimize_numeric(double p, const VisibilityObjective& objective, ConstraintLine line,
                               NumericOptions opts = {});

}  // namespace mzsim

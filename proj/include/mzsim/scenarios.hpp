#pragma once

// End-to-end builds of the two-photon interferometer models.

#include "mzsim/analytic.hpp"
#include "mzsim/detection.hpp"
#include "mzsim/mixed_state.hpp"

namespace mzsim {

struct ScenarioResult {
  double visibility = 0.0;
  /// Probability of the conditioning event the fringe is read under.
  double success_probability = 0.0;
  FringeSample fringe;
};

/// Noise photon that matches the signal label with probability `p`.
struct NoiseCase {
  double p = 0.0;

  static constexpr NoiseCase indistinguishable() { return {1.0}; }
  static constexpr NoiseCase distinguishable() { return {0.0}; }
  static constexpr NoiseCase mixture(double p) { return {p}; }
};

/// Two-mode model: equatorial signal in (A, B), noise photon created in B,
/// one photon removed label-blind from B, B attenuated by eta_b, then A and B
/// recombined on a 50:50 splitter. The fringe is the probability of a click at
/// D given that no photon was lost.
ScenarioResult simple_model(NoiseCase noise, double eta_b, int n_points = kDefaultPhaseSteps);

/// The label-blind subtraction applied to the noise-augmented equatorial
/// state, before attenuation. Exposed for inspection of the branch weights.
MixedState simple_model_subtracted(NoiseCase noise);

struct MzParams {
  double eta_s = 1.0;  // signal source coupling
  double eta_n = 1.0;  // noise source coupling
  double eta_a = 0.5;  // upper-arm transmissivity
  double eta_b = 1.0;  // lower-arm internal transmissivity
  double t = 0.5;      // VRC1 transmissivity
  double t_r = 0.5;    // VRC2 tap ratio
  double p = 0.0;      // indistinguishability probability

  /// Throws DomainError. Conditional runs also reject T in {0,1} and T_R = 1.
  void validate(bool conditional) const;
};

/// Probability of a coincidence between D and the tap detector D_R at phase phi.
double mz_coincidence(const MzParams& params, double phi);

/// Fringe of mz_coincidence over phi and its visibility.
ScenarioResult mz_visibility(const MzParams& params, int n_points = kDefaultPhaseSteps);

struct NoiseScalingResult {
  double visibility = 0.0;
  double eta_star = 0.0;  // per-cycle attenuation that maximizes the visibility
  double success_probability = 0.0;  // survival probability at eta_star
};

inline constexpr int kMaxNoisePhotons = 6;

/// N distinguishable noise photons; best visibility over the lower-arm
/// attenuation (golden section on [1e-4, 1], tolerance 1e-6).
NoiseScalingResult n_noise_scan(int n, NoiseSchedule schedule, int n_points = 16);
double n_noise_visibility(int n, NoiseSchedule schedule);

/// Coincidence probability when the signal photon and a noise photon meet
/// at a splitter of transmissivity t.
double hom_coincidence(double p, double t);
/// 1 - C(p)/C(0).
double hom_dip_visibility(double p, double t);

}  // namespace mzsim

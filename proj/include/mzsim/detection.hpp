#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mzsim/fock.hpp"
#include "mzsim/mixed_state.hpp"

namespace mzsim {

/// Threshold detector on one spatial path: it clicks on one or more photons
/// summed over all labels and never resolves the label.
struct DetectorSpec {
  Path watched_path;
};

/// Probability that every `clicks` detector fires and every `silences`
/// detector stays dark, marginalizing all other modes. Pure states are read
/// relative to their own norm; mixtures are weight-averaged over the trace.
double click_probability(const PureState& state, std::span<const DetectorSpec> clicks,
                         std::span<const DetectorSpec> silences = {});
double click_probability(const MixedState& state, std::span<const DetectorSpec> clicks,
                         std::span<const DetectorSpec> silences = {});

double coincidence_probability(const PureState& state, DetectorSpec a, DetectorSpec b);
double coincidence_probability(const MixedState& state, DetectorSpec a, DetectorSpec b);

/// One silenced detector per environment path present in the state.
std::vector<DetectorSpec> environment_detectors(const ModeRegistry& modes);
std::vector<DetectorSpec> environment_detectors(const MixedState& state);

struct FringeSample {
  std::vector<double> phases;
  std::vector<double> probabilities;
};

inline constexpr int kDefaultPhaseSteps = 256;

/// Samples `prob_at` on a uniform grid over [0, 2pi). Needs n_points >= 8.
FringeSample fringe(const std::function<double(double)>& prob_at, int n_points = kDefaultPhaseSteps);

/// 2|c1|/c0 from the DC and first-harmonic Fourier sums over the grid.
/// Exact for P = a + b cos(phi - phi0) sampled uniformly.
double visibility(const FringeSample& sample);

/// Largest which-way knowledge K allowed by V^2 + K^2 <= 1.
double which_way_bound(double v);

}  // namespace mzsim

#pragma once

// Passive linear-optical elements and the label-blind photon-subtraction
// channel. Elements act on every label independently: (x, l) couples only to
// (y, l).

#include <span>
#include <vector>

#include "mzsim/fock.hpp"
#include "mzsim/mixed_state.hpp"

namespace mzsim {

struct BeamSplitterSpec {
  Path path_x;
  Path path_y;
  double transmissivity = 0.5;  // T = cos^2(theta)
};

/// Real rotation:
///   a+_x -> sqrt(T) a+_x + sqrt(1-T) a+_y
///   a+_y -> -sqrt(1-T) a+_x + sqrt(T) a+_y
/// Partner modes missing from the registry are registered empty.
PureState beam_splitter(const PureState& state, const BeamSplitterSpec& spec);
MixedState beam_splitter(const MixedState& state, const BeamSplitterSpec& spec);

/// Multiplies every term by exp(i n phi), n = photons on `path` over all labels.
PureState phase_shift(const PureState& state, Path path, double phi);
MixedState phase_shift(const MixedState& state, Path path, double phi);

/// Beam splitter of transmissivity `eta` into a freshly registered
/// environment path. The environment stays in the state.
PureState loss(const PureState& state, Path path, double eta);
MixedState loss(const MixedState& state, Path path, double eta);

/// Label-blind removal of one photon from `paths`. One branch per
/// label-expanded mode m, holding a_m|psi> with weight <a_m^+ a_m>; the trace
/// is therefore the mean photon number on `paths` (not conditioned).
MixedState subtract_one_photon(const PureState& state, std::span<const Path> paths);
MixedState subtract_one_photon(const MixedState& state, std::span<const Path> paths);

/// Removal of `count` photons at once: one branch per unordered pattern
/// (multiset of modes), every pattern with the same operator weight.
MixedState subtract_photons(const PureState& state, std::span<const Path> paths, int count);
MixedState subtract_photons(const MixedState& state, std::span<const Path> paths, int count);

MixedState rename_path(const MixedState& state, Path from, Path to);

}  // namespace mzsim

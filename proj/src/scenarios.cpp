#include "mzsim/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "mzsim/errors.hpp"
#include "mzsim/golden_section.hpp"
#include "mzsim/optics.hpp"

namespace mzsim {
namespace {

constexpr LabeledMode kSignalA{kPathA, Label::signal()};
constexpr LabeledMode kSignalB{kPathB, Label::signal()};
constexpr Path kLowerArm[] = {kPathB};

void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(name) + " must lie in [0,1]");
}

// (|1,0> + |0,1>)/sqrt(2) on (A, B), signal label.
PureState equatorial_state(std::vector<LabeledMode> extra_modes) {
  std::vector<LabeledMode> modes{kSignalA, kSignalB};
  modes.insert(modes.end(), extra_modes.begin(), extra_modes.end());
  const ModeRegistry reg(modes);
  std::vector<int> in_a(reg.size(), 0), in_b(reg.size(), 0);
  in_a[0] = 1;
  in_b[1] = 1;
  const double h = 1.0 / std::sqrt(2.0);
  return PureState::basis(reg, in_a, h).plus(PureState::basis(reg, in_b, h));
}

MixedState recombine(const MixedState& state, double phi) {
  MixedState s = phase_shift(state, kPathA, phi);
  s = beam_splitter(s, {kPathB, kPathA, 0.5});
  return rename_path(rename_path(s, kPathA, kOutD), kPathB, kOutDbar);
}

// Fringe at D conditioned on every environment staying dark. The phase sits
// in the upper arm, which nothing else touches before recombination.
ScenarioResult conditioned_fringe(const MixedState& attenuated, int n_points) {
  const auto envs = environment_detectors(attenuated);
  const double survive = click_probability(attenuated, {}, envs);
  if (!(survive > 0.0)) throw UndefinedVisibilityError("no photon survives the attenuation");
  const DetectorSpec d[] = {{kOutD}};
  ScenarioResult r;
  r.fringe = fringe([&](double phi) { return click_probability(recombine(attenuated, phi), d, envs) / survive; },
                    n_points);
  r.visibility = visibility(r.fringe);
  r.success_probability = survive;
  return r;
}

// Two input photons: signal in A, noise with label `noise` in NoiseIn.
PureState mz_input(Label noise) {
  const ModeRegistry reg({kSignalA, kSignalB, {kNoiseIn, noise}, {kTap, Label::signal()}});
  return PureState::basis(reg, {1, 0, 1, 0});
}

MixedState mz_inputs(double p) {
  return MixedState::from_weighted({{p, mz_input(Label::signal())}, {1.0 - p, mz_input(Label::noise())}});
}

MixedState mz_lower_arm(MixedState s, const MzParams& prm) {
  s = beam_splitter(s, {kPathB, kNoiseIn, prm.t});
  s = loss(s, kPathB, prm.eta_b);
  return beam_splitter(s, {kPathB, kTap, 1.0 - prm.t_r});
}

double mz_detect(const MixedState& s) {
  return coincidence_probability(s, {kOutD}, {kTap});
}

}  // namespace

MixedState simple_model_subtracted(NoiseCase noise) {
  require_unit(noise.p, "p");
  const LabeledMode noise_b{kPathB, Label::noise()};
  const PureState psi = equatorial_state({noise_b});
  const MixedState created = MixedState::from_weighted({
      {noise.p, apply_creation(psi, kSignalB)},
      {1.0 - noise.p, apply_creation(psi, noise_b)},
  });
  return subtract_one_photon(created, kLowerArm);
}

ScenarioResult simple_model(NoiseCase noise, double eta_b, int n_points) {
  if (!(eta_b > 0.0 && eta_b <= 1.0)) throw DomainError("eta_b must lie in (0,1]");
  return conditioned_fringe(loss(simple_model_subtracted(noise), kPathB, eta_b), n_points);
}

void MzParams::validate(bool conditional) const {
  require_unit(eta_s, "eta_s");
  require_unit(eta_n, "eta_n");
  require_unit(eta_a, "eta_a");
  require_unit(eta_b, "eta_b");
  require_unit(t, "T");
  require_unit(t_r, "T_R");
  require_unit(p, "p");
  if (conditional) {
    if (t == 0.0 || t == 1.0)
      throw DomainError("T must lie strictly inside (0,1): the coincidence rate vanishes at T = 0 or 1");
    if (t_r == 1.0) throw DomainError("T_R must be below 1");
  }
}

double mz_coincidence(const MzParams& prm, double phi) {
  prm.validate(false);
  MixedState s = mz_inputs(prm.p);
  s = loss(s, kPathA, prm.eta_s);
  s = loss(s, kNoiseIn, prm.eta_n);
  s = beam_splitter(s, {kPathA, kPathB, 0.5});
  s = phase_shift(s, kPathA, phi);
  s = loss(s, kPathA, prm.eta_a);
  s = mz_lower_arm(s, prm);
  s = beam_splitter(s, {kPathB, kPathA, 0.5});
  s = rename_path(rename_path(s, kPathA, kOutD), kPathB, kOutDbar);
  return mz_detect(s);
}

ScenarioResult mz_visibility(const MzParams& prm, int n_points) {
  prm.validate(true);
  // Everything but the phase and the final splitter is phase independent.
  MixedState s = mz_inputs(prm.p);
  s = loss(s, kPathA, prm.eta_s);
  s = loss(s, kNoiseIn, prm.eta_n);
  s = beam_splitter(s, {kPathA, kPathB, 0.5});
  s = loss(s, kPathA, prm.eta_a);
  s = mz_lower_arm(s, prm);

  ScenarioResult r;
  r.fringe = fringe([&](double phi) { return mz_detect(recombine(s, phi)); }, n_points);
  try {
    r.visibility = visibility(r.fringe);
  } catch (const UndefinedVisibilityError&) {
    throw UndefinedVisibilityError("coincidence rate vanishes for every phase");
  }
  double mean = 0.0;
  for (double c : r.fringe.probabilities) mean += c;
  r.success_probability = mean / static_cast<double>(r.fringe.probabilities.size());
  return r;
}

NoiseScalingResult n_noise_scan(int n, NoiseSchedule schedule, int n_points) {
  if (n < 1) throw DomainError("noise photon count must be at least 1");
  if (n > kMaxNoisePhotons) throw DomainError("noise photon count above " + std::to_string(kMaxNoisePhotons));

  std::function<ScenarioResult(double)> run;
  MixedState subtracted;
  if (schedule == NoiseSchedule::simultaneous) {
    std::vector<LabeledMode> noise_modes;
    for (int k = 1; k <= n; ++k) noise_modes.push_back({kPathB, Label::noise(k)});
    PureState s = equatorial_state(noise_modes);
    for (const auto& m : noise_modes) s = apply_creation(s, m);
    subtracted = subtract_photons(normalize(s).first, kLowerArm, n);
    run = [&](double eta) { return conditioned_fringe(loss(subtracted, kPathB, eta), n_points); };
  } else {
    run = [&](double eta) {
      MixedState s(equatorial_state({}));
      for (int k = 1; k <= n; ++k) {
        const LabeledMode m{kPathB, Label::noise(k)};
        s = s.map([&](const PureState& b) { return apply_creation(b.with_mode(m), m); });
        s = subtract_one_photon(s, kLowerArm);
        s = loss(s, kPathB, eta);
      }
      return conditioned_fringe(s, n_points);
    };
  }
  const auto best = golden_section_maximize([&](double eta) { return run(eta).visibility; }, 1e-4, 1.0, 1e-6);
  return {best.value, best.argmax, run(best.argmax).success_probability};
}

double n_noise_visibility(int n, NoiseSchedule schedule) {
  return n_noise_scan(n, schedule).visibility;
}

double hom_coincidence(double p, double t) {
  require_unit(p, "p");
  require_unit(t, "T");
  auto pair = [](Label noise) {
    const ModeRegistry reg({kSignalA, {kPathB, noise}});
    return PureState::basis(reg, {1, 1});
  };
  MixedState s = MixedState::from_weighted({{p, pair(Label::signal())}, {1.0 - p, pair(Label::noise())}});
  s = beam_splitter(s, {kPathA, kPathB, t});
  return coincidence_probability(s, {kPathA}, {kPathB});
}

double hom_dip_visibility(double p, double t) {
  return 1.0 - hom_coincidence(p, t) / hom_coincidence(0.0, t);
}

}  // namespace mzsim

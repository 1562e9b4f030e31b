#include "mzsim/detection.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "mzsim/errors.hpp"

namespace mzsim {
namespace {

struct Watch {
  std::vector<std::size_t> indices;
  bool click;
};

void require_disjoint(std::span<const DetectorSpec> clicks, std::span<const DetectorSpec> silences) {
  for (const auto& c : clicks)
    for (const auto& s : silences)
      if (c.watched_path == s.watched_path)
        throw DomainError("detector on " + c.watched_path.name() + " is both a click and a silence");
}

std::vector<Watch> watches(const ModeRegistry& modes, std::span<const DetectorSpec> clicks,
                           std::span<const DetectorSpec> silences) {
  std::vector<Watch> out;
  for (const auto& d : clicks) {
    if (!modes.contains(d.watched_path)) throw RegistryError("detector path " + d.watched_path.name() + " is not registered");
    out.push_back({modes.indices_on(d.watched_path), true});
  }
  for (const auto& d : silences) {
    if (!modes.contains(d.watched_path)) throw RegistryError("detector path " + d.watched_path.name() + " is not registered");
    out.push_back({modes.indices_on(d.watched_path), false});
  }
  return out;
}

}  // namespace

double click_probability(const PureState& state, std::span<const DetectorSpec> clicks,
                         std::span<const DetectorSpec> silences) {
  require_disjoint(clicks, silences);
  const auto ws = watches(state.modes(), clicks, silences);
  if (state.is_zero()) return 0.0;
  double p = 0.0;
  for (const auto& [ket, amp] : state.terms()) {
    const bool match = std::all_of(ws.begin(), ws.end(), [&](const Watch& w) {
      int n = 0;
      for (std::size_t i : w.indices) n += ket[i];
      return w.click == (n > 0);
    });
    if (match) p += std::norm(amp);
  }
  return p / state.norm_sq();
}

double click_probability(const MixedState& state, std::span<const DetectorSpec> clicks,
                         std::span<const DetectorSpec> silences) {
  require_disjoint(clicks, silences);
  if (state.empty()) return 0.0;
  double p = 0.0;
  for (const auto& b : state.branches()) p += b.weight * click_probability(b.state, clicks, silences);
  return p / state.trace();
}

double coincidence_probability(const PureState& state, DetectorSpec a, DetectorSpec b) {
  if (a.watched_path == b.watched_path) throw DomainError("coincidence needs two distinct detectors");
  const DetectorSpec both[] = {a, b};
  return click_probability(state, both);
}

double coincidence_probability(const MixedState& state, DetectorSpec a, DetectorSpec b) {
  if (a.watched_path == b.watched_path) throw DomainError("coincidence needs two distinct detectors");
  const DetectorSpec both[] = {a, b};
  return click_probability(state, both);
}

std::vector<DetectorSpec> environment_detectors(const ModeRegistry& modes) {
  std::vector<DetectorSpec> out;
  for (Path p : modes.paths())
    if (p.is_environment()) out.push_back({p});
  return out;
}

std::vector<DetectorSpec> environment_detectors(const MixedState& state) {
  std::vector<DetectorSpec> out;
  for (const auto& b : state.branches()) {
    for (const auto& d : environment_detectors(b.state.modes())) {
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const DetectorSpec& e) { return e.watched_path == d.watched_path; });
      if (!seen) out.push_back(d);
    }
  }
  return out;
}

FringeSample fringe(const std::function<double(double)>& prob_at, int n_points) {
  if (n_points < 8) throw DomainError("a fringe needs at least 8 phase points");
  FringeSample s;
  s.phases.reserve(static_cast<std::size_t>(n_points));
  s.probabilities.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / n_points;
    const double p = prob_at(phi);
    if (!(p >= -kTolerance && p <= 1.0 + kTolerance))
      throw DomainError("fringe probability " + std::to_string(p) + " outside [0,1]");
    s.phases.push_back(phi);
    s.probabilities.push_back(std::clamp(p, 0.0, 1.0));
  }
  return s;
}

double visibility(const FringeSample& sample) {
  const std::size_t n = sample.phases.size();
  if (n == 0 || n != sample.probabilities.size()) throw DomainError("malformed fringe sample");
  double c0 = 0.0;
  std::complex<double> c1{};
  for (std::size_t k = 0; k < n; ++k) {
    c0 += sample.probabilities[k];
    c1 += sample.probabilities[k] * std::polar(1.0, -sample.phases[k]);
  }
  c0 /= static_cast<double>(n);
  c1 /= static_cast<double>(n);
  if (c0 <= 1e-15) throw UndefinedVisibilityError("fringe carries no signal");
  const double v = 2.0 * std::abs(c1) / c0;
  if (v > 1.0 + 1e-9) throw UndefinedVisibilityError("sample is not a sinusoidal fringe");
  return std::min(v, 1.0);
}

double which_way_bound(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("visibility must lie in [0,1]");
  return std::sqrt(1.0 - v * v);
}

}  // namespace mzsim

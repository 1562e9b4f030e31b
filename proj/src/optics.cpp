#include "mzsim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mzsim/errors.hpp"

namespace mzsim {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void require_path(const ModeRegistry& modes, Path path) {
  if (!modes.contains(path)) throw RegistryError("path " + path.name() + " is not registered");
}

// Coefficients <k, total-k | rotated |n, m> for cos = c, sin = s.
std::vector<double> pair_coefficients(int n, int m, double c, double s) {
  const int total = n + m;
  const double norm_in = std::sqrt(factorial(n) * factorial(m));
  std::vector<double> out(static_cast<std::size_t>(total + 1), 0.0);
  for (int k = 0; k <= total; ++k) {
    double coef = 0.0;
    for (int i = std::max(0, k - m); i <= std::min(n, k); ++i) {
      const int j = k - i;
      coef += binomial(n, i) * std::pow(c, i) * std::pow(s, n - i) *
              binomial(m, j) * std::pow(-s, j) * std::pow(c, m - j);
    }
    out[static_cast<std::size_t>(k)] = coef * std::sqrt(factorial(k) * factorial(total - k)) / norm_in;
  }
  return out;
}

// Rotation of the two-mode pair (ix, iy) with cos = c, sin = s.
PureState rotate_pair(const PureState& state, std::size_t ix, std::size_t iy, double c, double s) {
  std::map<std::pair<int, int>, std::vector<double>> cache;
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) {
    const int n = ket[ix];
    const int m = ket[iy];
    if (n == 0 && m == 0) {
      out[ket] += amp;
      continue;
    }
    auto it = cache.find({n, m});
    if (it == cache.end()) it = cache.emplace(std::pair{n, m}, pair_coefficients(n, m, c, s)).first;
    const auto& coefs = it->second;
    FockBasisVector k_ket = ket;
    for (int k = 0; k <= n + m; ++k) {
      const double coef = coefs[static_cast<std::size_t>(k)];
      if (coef == 0.0) continue;
      k_ket.occupations[ix] = k;
      k_ket.occupations[iy] = n + m - k;
      out[k_ket] += amp * coef;
    }
  }
  return PureState(state.modes(), std::move(out));
}

std::vector<std::size_t> modes_on(const ModeRegistry& modes, std::span<const Path> paths) {
  if (paths.empty()) throw DomainError("subtraction needs at least one path");
  std::vector<std::size_t> idx;
  for (Path p : paths) {
    require_path(modes, p);
    for (std::size_t i : modes.indices_on(p))
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

void require_normalized(const PureState& state) {
  if (std::abs(state.norm_sq() - 1.0) > kTolerance)
    throw DomainError("subtraction expects a normalized state");
}

}  // namespace

PureState beam_splitter(const PureState& state, const BeamSplitterSpec& spec) {
  const double t = spec.transmissivity;
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("beam splitter transmissivity must lie in [0,1]");
  if (spec.path_x == spec.path_y) throw DomainError("beam splitter needs two distinct paths");
  require_path(state.modes(), spec.path_x);
  require_path(state.modes(), spec.path_y);

  std::vector<Label> labels = state.modes().labels_on(spec.path_x);
  for (Label l : state.modes().labels_on(spec.path_y))
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);

  std::vector<LabeledMode> partners;
  for (Label l : labels) {
    partners.push_back({spec.path_x, l});
    partners.push_back({spec.path_y, l});
  }
  PureState out = state.with_modes(partners);

  const double c = std::sqrt(t);
  const double s = std::sqrt(1.0 - t);
  for (Label l : labels) {
    out = rotate_pair(out, out.modes().index_of({spec.path_x, l}), out.modes().index_of({spec.path_y, l}), c, s);
  }
  return out;
}

MixedState beam_splitter(const MixedState& state, const BeamSplitterSpec& spec) {
  return state.map([&](const PureState& s) { return beam_splitter(s, spec); });
}

PureState phase_shift(const PureState& state, Path path, double phi) {
  require_path(state.modes(), path);
  const auto idx = state.modes().indices_on(path);
  return state.transformed([&](const FockBasisVector& ket, Amplitude amp) {
    int n = 0;
    for (std::size_t i : idx) n += ket[i];
    return amp * std::polar(1.0, n * phi);
  });
}

MixedState phase_shift(const MixedState& state, Path path, double phi) {
  return state.map([&](const PureState& s) { return phase_shift(s, path, phi); });
}

PureState loss(const PureState& state, Path path, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("loss transmissivity must lie in [0,1]");
  require_path(state.modes(), path);
  const Path env = Path::env(state.modes().next_env_index());
  std::vector<LabeledMode> env_modes;
  for (Label l : state.modes().labels_on(path)) env_modes.push_back({env, l});
  return beam_splitter(state.with_modes(env_modes), {path, env, eta});
}

MixedState loss(const MixedState& state, Path path, double eta) {
  return state.map([&](const PureState& s) { return loss(s, path, eta); });
}

MixedState subtract_one_photon(const PureState& state, std::span<const Path> paths) {
  const auto idx = modes_on(state.modes(), paths);
  require_normalized(state);
  std::vector<std::pair<double, PureState>> branches;
  for (std::size_t i : idx) branches.emplace_back(1.0, apply_annihilation(state, state.modes()[i]));
  return MixedState::from_weighted(branches);
}

MixedState subtract_one_photon(const MixedState& state, std::span<const Path> paths) {
  return state.expand([&](const PureState& s) { return subtract_one_photon(s, paths); });
}

MixedState subtract_photons(const PureState& state, std::span<const Path> paths, int count) {
  if (count < 1) throw DomainError("photon count to subtract must be positive");
  const auto idx = modes_on(state.modes(), paths);
  require_normalized(state);

  // Enumerate non-decreasing index sequences (multisets) of length `count`.
  std::vector<std::pair<double, PureState>> branches;
  std::vector<std::size_t> pick(static_cast<std::size_t>(count), 0);
  while (true) {
    PureState s = state;
    for (std::size_t p : pick) {
      s = apply_annihilation(s, state.modes()[idx[p]]);
      if (s.is_zero()) break;
    }
    branches.emplace_back(1.0, std::move(s));

    int pos = count - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == idx.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = pick[static_cast<std::size_t>(pos)] + 1;
    for (auto i = static_cast<std::size_t>(pos); i < pick.size(); ++i) pick[i] = next;
  }
  return MixedState::from_weighted(branches);
}

MixedState subtract_photons(const MixedState& state, std::span<const Path> paths, int count) {
  return state.expand([&](const PureState& s) { return subtract_photons(s, paths, count); });
}

MixedState rename_path(const MixedState& state, Path from, Path to) {
  return state.map([&](const PureState& s) { return s.rename_path(from, to); });
}

}  // namespace mzsim

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <utility>
#include <numbers>
#include <random>
#include <vector>

#include "mzsim/fock.hpp"

namespace mzsim::test {

inline constexpr double kPi = std::numbers::pi;

/// Seeded generator for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Amplitude amplitude() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

  /// Random superposition over `modes` with at most `max_photons` photons in total.
  PureState state(const ModeRegistry& modes, int max_photons, int max_terms = 6) {
    PureState::Terms terms;
    const int n_terms = integer(1, max_terms);
    for (int k = 0; k < n_terms; ++k) {
      std::vector<int> occ(modes.size(), 0);
      const int photons = integer(0, max_photons);
      for (int j = 0; j < photons; ++j) ++occ[static_cast<std::size_t>(integer(0, static_cast<int>(modes.size()) - 1))];
      terms[FockBasisVector{occ}] += amplitude();
    }
    return PureState(modes, std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

inline ModeRegistry modes_ab() { return ModeRegistry({{kPathA, Label::signal()}, {kPathB, Label::signal()}}); }

/// (|10> + e^{i phi}|01>)/sqrt(2) over (A,sigma), (B,sigma).
inline PureState equatorial(double phi) {
  PureState::Terms t;
  t[FockBasisVector{{1, 0}}] = 1.0 / std::sqrt(2.0);
  t[FockBasisVector{{0, 1}}] = std::polar(1.0 / std::sqrt(2.0), phi);
  return PureState(modes_ab(), std::move(t));
}

inline int total_photons_in_every_term(const PureState& s) {
  int n = -1;
  for (const auto& [ket, amp] : s.terms()) {
    if (n >= 0 && ket.total() != n) return -2;
    n = ket.total();
  }
  return n;
}

/// Registry-order independent view: occupied modes of each ket mapped to its amplitude.
using Canonical = std::map<std::vector<std::pair<LabeledMode, int>>, Amplitude>;

inline Canonical canonical(const PureState& s) {
  Canonical out;
  for (const auto& [ket, amp] : s.terms()) {
    std::vector<std::pair<LabeledMode, int>> key;
    for (std::size_t i = 0; i < ket.size(); ++i)
      if (ket[i] > 0) key.emplace_back(s.modes()[i], ket[i]);
    std::sort(key.begin(), key.end());
    out[key] += amp;
  }
  return out;
}

inline double distance(const PureState& x, const PureState& y) {
  auto cx = canonical(x);
  auto cy = canonical(y);
  double d = 0.0;
  for (const auto& [k, a] : cx) {
    auto it = cy.find(k);
    d = std::max(d, std::abs(a - (it == cy.end() ? Amplitude{} : it->second)));
  }
  for (const auto& [k, a] : cy)
    if (!cx.count(k)) d = std::max(d, std::abs(a));
  return d;
}

/// Probability of each total photon number.
inline std::map<int, double> photon_number_distribution(const PureState& s) {
  std::map<int, double> out;
  for (const auto& [ket, amp] : s.terms()) out[ket.total()] += std::norm(amp);
  return out;
}

}  // namespace mzsim::test

#include "mzsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mzsim/errors.hpp"

namespace mzsim {

std::string Path::name() const {
  switch (kind) {
    case PathKind::A: return "A";
    case PathKind::B: return "B";
    case PathKind::NoiseIn: return "NoiseIn";
    case PathKind::Tap: return "Tap";
    case PathKind::Env: return "Env" + std::to_string(index);
    case PathKind::OutD: return "OutD";
    case PathKind::OutDbar: return "OutDbar";
  }
  return "?";
}

std::string Label::name() const {
  if (id == 0) return "sigma";
  return id == 1 ? "nu" : "nu" + std::to_string(id);
}

std::string LabeledMode::name() const { return "(" + path.name() + "," + label.name() + ")"; }

ModeRegistry::ModeRegistry(std::vector<LabeledMode> modes) {
  for (const auto& m : modes) {
    if (contains(m)) throw RegistryError("duplicate mode " + m.name());
    modes_.push_back(m);
  }
}

std::optional<std::size_t> ModeRegistry::find(const LabeledMode& mode) const {
  auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - modes_.begin());
}

std::size_t ModeRegistry::index_of(const LabeledMode& mode) const {
  if (auto i = find(mode)) return *i;
  throw RegistryError("mode " + mode.name() + " is not registered");
}

bool ModeRegistry::contains(Path path) const {
  return std::any_of(modes_.begin(), modes_.end(), [&](const LabeledMode& m) { return m.path == path; });
}

std::vector<std::size_t> ModeRegistry::indices_on(Path path) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < modes_.size(); ++i)
    if (modes_[i].path == path) out.push_back(i);
  return out;
}

std::vector<Label> ModeRegistry::labels_on(Path path) const {
  std::vector<Label> out;
  for (const auto& m : modes_)
    if (m.path == path) out.push_back(m.label);
  return out;
}

std::vector<Path> ModeRegistry::paths() const {
  std::vector<Path> out;
  for (const auto& m : modes_)
    if (std::find(out.begin(), out.end(), m.path) == out.end()) out.push_back(m.path);
  return out;
}

int ModeRegistry::next_env_index() const {
  int k = 0;
  for (const auto& m : modes_)
    if (m.path.is_environment()) k = std::max(k, m.path.index);
  return k + 1;
}

ModeRegistry ModeRegistry::with(const LabeledMode& mode) const {
  if (contains(mode)) throw RegistryError("duplicate mode " + mode.name());
  ModeRegistry out = *this;
  out.modes_.push_back(mode);
  return out;
}

int FockBasisVector::total() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

PureState::PureState(ModeRegistry modes) : modes_(std::move(modes)) {}

PureState::PureState(ModeRegistry modes, Terms terms) : modes_(std::move(modes)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    const auto& [ket, amp] = *it;
    if (ket.size() != modes_.size())
      throw RegistryError("basis vector length does not match the mode registry");
    if (std::any_of(ket.occupations.begin(), ket.occupations.end(), [](int n) { return n < 0; }))
      throw DomainError("negative occupation number");
    if (std::abs(amp) < kPruneThreshold) {
      it = terms_.erase(it);
      continue;
    }
    norm_sq_ += std::norm(amp);
    ++it;
  }
}

PureState PureState::vacuum(ModeRegistry modes) {
  return basis(std::move(modes), {}, 1.0);
}

PureState PureState::basis(ModeRegistry modes, std::vector<int> occupations, Amplitude amp) {
  if (occupations.empty()) occupations.assign(modes.size(), 0);
  Terms t;
  t.emplace(FockBasisVector{std::move(occupations)}, amp);
  return PureState(std::move(modes), std::move(t));
}

Amplitude PureState::amplitude(const FockBasisVector& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Amplitude{} : it->second;
}

int PureState::max_photon_number() const {
  int n = 0;
  for (const auto& [ket, amp] : terms_) n = std::max(n, ket.total());
  return n;
}

PureState PureState::with_mode(const LabeledMode& mode) const {
  if (modes_.contains(mode)) throw RegistryError("duplicate mode " + mode.name());
  return with_modes({mode});
}

PureState PureState::with_modes(const std::vector<LabeledMode>& modes) const {
  std::vector<LabeledMode> missing;
  for (const auto& m : modes)
    if (!modes_.contains(m) && std::find(missing.begin(), missing.end(), m) == missing.end()) missing.push_back(m);
  if (missing.empty()) return *this;
  ModeRegistry reg = modes_;
  for (const auto& m : missing) reg = reg.with(m);
  Terms t;
  for (const auto& [ket, amp] : terms_) {
    FockBasisVector k = ket;
    k.occupations.resize(reg.size(), 0);
    t.emplace_hint(t.end(), std::move(k), amp);
  }
  return PureState(std::move(reg), std::move(t));
}

PureState PureState::rename_path(Path from, Path to) const {
  if (!modes_.contains(from)) throw RegistryError("path " + from.name() + " is not registered");
  if (modes_.contains(to)) throw RegistryError("path " + to.name() + " is already registered");
  std::vector<LabeledMode> renamed = modes_.modes();
  for (auto& m : renamed)
    if (m.path == from) m.path = to;
  PureState out = *this;
  out.modes_ = ModeRegistry(std::move(renamed));
  return out;
}

PureState PureState::scaled(Amplitude factor) const {
  return transformed([factor](const FockBasisVector&, Amplitude a) { return a * factor; });
}

PureState PureState::plus(const PureState& other) const {
  if (!(modes_ == other.modes_)) throw RegistryError("cannot add states over different registries");
  Terms t = terms_;
  for (const auto& [ket, amp] : other.terms_) t[ket] += amp;
  return PureState(modes_, std::move(t));
}

PureState apply_creation(const PureState& state, const LabeledMode& mode) {
  const std::size_t i = state.modes().index_of(mode);
  PureState::Terms t;
  for (const auto& [ket, amp] : state.terms()) {
    FockBasisVector k = ket;
    const int n = k.occupations[i]++;
    // Raising one coordinate of every key keeps the lexicographic order.
    t.emplace_hint(t.end(), std::move(k), amp * std::sqrt(static_cast<double>(n + 1)));
  }
  return PureState(state.modes(), std::move(t));
}

PureState apply_annihilation(const PureState& state, const LabeledMode& mode) {
  const std::size_t i = state.modes().index_of(mode);
  PureState::Terms t;
  for (const auto& [ket, amp] : state.terms()) {
    const int n = ket.occupations[i];
    if (n == 0) continue;
    FockBasisVector k = ket;
    --k.occupations[i];
    t.emplace_hint(t.end(), std::move(k), amp * std::sqrt(static_cast<double>(n)));
  }
  return PureState(state.modes(), std::move(t));
}

std::pair<PureState, double> normalize(const PureState& state) {
  const double n2 = state.norm_sq();
  if (!(n2 > 0.0)) throw ZeroNormError("cannot normalize the zero state");
  return {state.scaled(1.0 / std::sqrt(n2)), n2};
}

double norm_sq(const PureState& state) { return state.norm_sq(); }

}  // namespace mzsim

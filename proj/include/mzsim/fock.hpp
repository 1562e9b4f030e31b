#pragma once

// Sparse few-photon bosonic states over labeled modes.
//
// A mode is addressed by a spatial path plus an internal label. Two modes on
// the same path with different labels never interfere, but detectors watching
// that path cannot tell them apart.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mzsim {

enum class PathKind : std::uint8_t { A, B, NoiseIn, Tap, Env, OutD, OutDbar };

struct Path {
  PathKind kind = PathKind::A;
  int index = 0;  // only meaningful for Env paths (1-based)

  static constexpr Path env(int k) { return Path{PathKind::Env, k}; }
  constexpr bool is_environment() const { return kind == PathKind::Env; }
  std::string name() const;

  friend constexpr auto operator<=>(const Path&, const Path&) = default;
};

inline constexpr Path kPathA{PathKind::A};
inline constexpr Path kPathB{PathKind::B};
inline constexpr Path kNoiseIn{PathKind::NoiseIn};
inline constexpr Path kTap{PathKind::Tap};
inline constexpr Path kOutD{PathKind::OutD};
inline constexpr Path kOutDbar{PathKind::OutDbar};

/// Internal degree of freedom. Id 0 is the signal type; ids >= 1 are
/// mutually distinguishable noise types.
struct Label {
  int id = 0;

  static constexpr Label signal() { return Label{0}; }
  static constexpr Label noise(int k = 1) { return Label{k}; }
  std::string name() const;

  friend constexpr auto operator<=>(const Label&, const Label&) = default;
};

struct LabeledMode {
  Path path;
  Label label;

  std::string name() const;
  friend constexpr auto operator<=>(const LabeledMode&, const LabeledMode&) = default;
};

/// Ordered set of modes. Order is insertion order and never changes, so
/// occupation vectors stay valid when a registry is extended.
class ModeRegistry {
 public:
  ModeRegistry() = default;
  explicit ModeRegistry(std::vector<LabeledMode> modes);

  std::size_t size() const { return modes_.size(); }
  const std::vector<LabeledMode>& modes() const { return modes_; }
  const LabeledMode& operator[](std::size_t i) const { return modes_[i]; }

  std::optional<std::size_t> find(const LabeledMode& mode) const;
  /// Throws RegistryError when the mode is absent.
  std::size_t index_of(const LabeledMode& mode) const;
  bool contains(const LabeledMode& mode) const { return find(mode).has_value(); }
  bool contains(Path path) const;

  std::vector<std::size_t> indices_on(Path path) const;
  std::vector<Label> labels_on(Path path) const;
  std::vector<Path> paths() const;
  /// Smallest environment index not yet in use.
  int next_env_index() const;

  /// Copy with `mode` appended. Throws RegistryError on duplicates.
  ModeRegistry with(const LabeledMode& mode) const;

  friend bool operator==(const ModeRegistry&, const ModeRegistry&) = default;

 private:
  std::vector<LabeledMode> modes_;
};

struct FockBasisVector {
  std::vector<int> occupations;

  int total() const;
  std::size_t size() const { return occupations.size(); }
  int operator[](std::size_t i) const { return occupations[i]; }

  friend auto operator<=>(const FockBasisVector&, const FockBasisVector&) = default;
};

using Amplitude = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-15;
inline constexpr double kTolerance = 1e-12;

/// Sparse superposition of Fock basis vectors. Immutable; every operation
/// returns a new state. The state need not be normalized.
class PureState {
 public:
  using Terms = std::map<FockBasisVector, Amplitude>;

  /// Zero state over `modes`.
  explicit PureState(ModeRegistry modes);
  PureState(ModeRegistry modes, Terms terms);

  static PureState vacuum(ModeRegistry modes);
  static PureState basis(ModeRegistry modes, std::vector<int> occupations, Amplitude amp = 1.0);

  const ModeRegistry& modes() const { return modes_; }
  const Terms& terms() const { return terms_; }
  double norm_sq() const { return norm_sq_; }
  bool is_zero() const { return terms_.empty(); }
  Amplitude amplitude(const FockBasisVector& v) const;
  /// Largest total photon number among the stored terms (0 for the zero state).
  int max_photon_number() const;

  /// Same state over the registry extended by `mode` (empty in every term).
  PureState with_mode(const LabeledMode& mode) const;
  /// Registers every mode in `modes` that is not yet present.
  PureState with_modes(const std::vector<LabeledMode>& modes) const;
  /// Replaces `from` by `to` in the registry; `to` must be unregistered.
  PureState rename_path(Path from, Path to) const;

  PureState scaled(Amplitude factor) const;
  /// Same kets, amplitudes replaced by f(ket, amplitude).
  template <class F>
  PureState transformed(F f) const {
    PureState out = *this;
    out.norm_sq_ = 0.0;
    for (auto it = out.terms_.begin(); it != out.terms_.end();) {
      it->second = f(it->first, it->second);
      if (std::abs(it->second) < kPruneThreshold) {
        it = out.terms_.erase(it);
      } else {
        out.norm_sq_ += std::norm(it->second);
        ++it;
      }
    }
    return out;
  }
  /// Sum of two states over the same registry.
  PureState plus(const PureState& other) const;

 private:
  ModeRegistry modes_;
  Terms terms_;
  double norm_sq_ = 0.0;
};

PureState apply_creation(const PureState& state, const LabeledMode& mode);
PureState apply_annihilation(const PureState& state, const LabeledMode& mode);
/// Returns the unit-norm state and the squared norm it had before.
std::pair<PureState, double> normalize(const PureState& state);
double norm_sq(const PureState& state);

}  // namespace mzsim

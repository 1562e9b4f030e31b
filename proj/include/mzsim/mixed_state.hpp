#pragma once

#include <functional>
#include <vector>

#include "mzsim/fock.hpp"

namespace mzsim {

/// One member of a classical ensemble: a unit-norm state and its weight.
struct Branch {
  double weight = 0.0;
  PureState state;
};

/// Classical mixture of pure states. Each branch state has unit norm; the
/// weights carry all probability. The trace is the sum of the weights and is
/// left unnormalized, so conditioning events (and the ladder-operator channels
/// whose total weight can exceed one) keep their relative weights until
/// conditioned() is called.
class MixedState {
 public:
  MixedState() = default;
  /// Single branch; the weight is the squared norm of `state`.
  explicit MixedState(const PureState& state);

  /// Normalizes every state and folds its squared norm into the weight.
  /// Zero states and zero weights are dropped.
  static MixedState from_weighted(const std::vector<std::pair<double, PureState>>& terms);
  /// Weighted union of ensembles.
  static MixedState mixture(const std::vector<std::pair<double, MixedState>>& parts);

  const std::vector<Branch>& branches() const { return branches_; }
  double trace() const { return trace_; }
  bool empty() const { return branches_.empty(); }

  /// Copy rescaled to unit trace. Throws ZeroNormError on a zero-trace ensemble.
  MixedState conditioned() const;

  /// Applies a linear map to every branch; the map's norm change goes into the weight.
  MixedState map(const std::function<PureState(const PureState&)>& f) const;
  /// Expands every branch into a sub-ensemble (weights multiply).
  MixedState expand(const std::function<MixedState(const PureState&)>& f) const;

 private:
  std::vector<Branch> branches_;
  double trace_ = 0.0;
};

}  // namespace mzsim

#include "mzsim/mixed_state.hpp"

#include <cmath>

#include "mzsim/errors.hpp"

namespace mzsim {

MixedState::MixedState(const PureState& state) : MixedState(from_weighted({{1.0, state}})) {}

MixedState MixedState::from_weighted(const std::vector<std::pair<double, PureState>>& terms) {
  MixedState out;
  for (const auto& [w, s] : terms) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("mixture weight must be finite and non-negative");
    if (w == 0.0 || s.is_zero()) continue;
    auto [unit, n2] = normalize(s);
    out.branches_.push_back({w * n2, std::move(unit)});
    out.trace_ += w * n2;
  }
  return out;
}

MixedState MixedState::mixture(const std::vector<std::pair<double, MixedState>>& parts) {
  MixedState out;
  for (const auto& [w, m] : parts) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("mixture weight must be finite and non-negative");
    if (w == 0.0) continue;
    for (const auto& b : m.branches_) {
      out.branches_.push_back({w * b.weight, b.state});
      out.trace_ += w * b.weight;
    }
  }
  return out;
}

MixedState MixedState::conditioned() const {
  if (!(trace_ > 0.0)) throw ZeroNormError("cannot condition a zero-trace ensemble");
  MixedState out = *this;
  for (auto& b : out.branches_) b.weight /= trace_;
  out.trace_ = 1.0;
  return out;
}

MixedState MixedState::map(const std::function<PureState(const PureState&)>& f) const {
  std::vector<std::pair<double, PureState>> terms;
  terms.reserve(branches_.size());
  for (const auto& b : branches_) terms.emplace_back(b.weight, f(b.state));
  return from_weighted(terms);
}

MixedState MixedState::expand(const std::function<MixedState(const PureState&)>& f) const {
  std::vector<std::pair<double, MixedState>> parts;
  parts.reserve(branches_.size());
  for (const auto& b : branches_) parts.emplace_back(b.weight, f(b.state));
  return mixture(parts);
}

}  // namespace mzsim

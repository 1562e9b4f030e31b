#pragma once

#include <functional>

namespace mzsim {

struct LineMaximum {
  double argmax = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Stops once the bracket is narrower than `tol`. The better of the final
/// interior point and the two bracket ends is returned.
LineMaximum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                    double tol = 1e-6);

}  // namespace mzsim

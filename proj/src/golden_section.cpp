#include "mzsim/golden_section.hpp"

#include <cmath>

#include "mzsim/errors.hpp"

namespace mzsim {

LineMaximum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("golden-section bracket must satisfy lo < hi");
  if (!(tol > 0.0)) throw DomainError("golden-section tolerance must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  LineMaximum out;
  auto eval = [&](double x) {
    const double v = f(x);
    ++out.evaluations;
    if (!std::isfinite(v)) throw DomainError("objective returned a non-finite value");
    return v;
  };

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }

  // Ties prefer the smaller abscissa.
  out.argmax = fc >= fd ? c : d;
  out.value = fc >= fd ? fc : fd;
  for (double edge : {lo, hi}) {
    if (b - a > 0 && (edge == a || edge == b)) {
      const double fe = eval(edge);
      if (fe > out.value || (fe == out.value && edge < out.argmax)) {
        out.argmax = edge;
        out.value = fe;
      }
    }
  }
  return out;
}

}  // namespace mzsim

#pragma once

#include <cmath>

namespace crosspack {

struct ScalarMaximum {
  double x = 0;
  double value = 0;
};

// Golden-section search for the maximum of a unimodal f on [a, b].
template <typename F>
ScalarMaximum golden_section_maximize(F&& f, double a, double b, double width,
                                      int max_iterations = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iterations && (b - a) > width; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

}  // namespace crosspack

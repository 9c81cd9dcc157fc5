#include "crosspack/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crosspack/errors.hpp"

namespace crosspack {

namespace {

constexpr double kRescaleAbove = 1e150;

void check_alpha(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("jacobi: alpha must be > -1");
  }
}

}  // namespace

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

ScaledValue jacobi_eval_scaled(int k, double alpha, double x) {
  check_alpha(alpha);
  if (k < 0) throw DomainError("jacobi: degree must be >= 0");
  ScaledValue out{1.0, 0.0};
  if (k == 0) return out;
  long double prev = 1.0L;
  long double cur = (alpha + 1.0L) * x;
  double log_scale = 0.0;
  const long double a = alpha;
  for (int m = 2; m <= k; ++m) {
    // Symmetric case of the Jacobi recurrence (beta = alpha):
    // 2m(m+2a)(2m+2a-2) P_m = (2m+2a-1)(2m+2a)(2m+2a-2) x P_{m-1}
    //                         - 2(m+a-1)^2 (2m+2a) P_{m-2}
    const long double s = 2.0L * m + 2.0L * a;
    const long double lead = 2.0L * m * (m + 2.0L * a) * (s - 2.0L);
    const long double a1 = (s - 1.0L) * s * (s - 2.0L) / lead;
    const long double a2 = 2.0L * (m + a - 1.0L) * (m + a - 1.0L) * s / lead;
    const long double next = a1 * x * cur - a2 * prev;
    prev = cur;
    cur = next;
    const long double mag = std::max(std::fabs(cur), std::fabs(prev));
    if (mag > kRescaleAbove) {
      prev /= mag;
      cur /= mag;
      log_scale += static_cast<double>(std::log(mag));
    }
  }
  out.mantissa = static_cast<double>(cur);
  out.log_scale = log_scale;
  return out;
}

double jacobi_eval(int k, double alpha, double x) {
  return jacobi_eval_scaled(k, alpha, x).value();
}

std::vector<double> jacobi_largest_roots(int k_max, double alpha,
                                         double tolerance) {
  check_alpha(alpha);
  if (k_max < 1) throw DomainError("jacobi: degree must be >= 1");
  std::vector<double> roots(static_cast<std::size_t>(k_max) + 1,
                            std::numeric_limits<double>::quiet_NaN());
  roots[1] = 0.0;
  for (int k = 2; k <= k_max; ++k) {
    // P_k(1) > 0 and P_k has exactly one root in (t_{k-1}, 1).
    double lo = roots[k - 1];
    double hi = 1.0;
    const double at_lo = jacobi_eval_scaled(k, alpha, lo).mantissa;
    if (at_lo == 0.0) {
      throw NumericalError("jacobi_largest_root: interlacing bracket degenerate");
    }
    if (at_lo > 0.0) {
      throw NumericalError("jacobi_largest_root: bisection bracket has no sign change");
    }
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double v = jacobi_eval_scaled(k, alpha, mid).mantissa;
      if (v == 0.0) {
        lo = hi = mid;
        break;
      }
      (v < 0.0 ? lo : hi) = mid;
    }
    roots[k] = 0.5 * (lo + hi);
  }
  return roots;
}

double jacobi_largest_root(int k, double alpha) {
  return jacobi_largest_roots(k, alpha).back();
}

}  // namespace crosspack

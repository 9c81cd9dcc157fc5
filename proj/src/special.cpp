#include "crosspack/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "crosspack/errors.hpp"

namespace crosspack {

double log_gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma_fn: argument must be positive and finite");
  }
  int sign = 0;
  // Reentrant variant: std::lgamma writes the global signgam.
  return ::lgamma_r(x, &sign);
}

LogNonNeg log_ball_volume(int n) {
  if (n < 0) throw DomainError("log_ball_volume: dimension must be >= 0");
  if (n == 0) return LogNonNeg::one();
  return LogNonNeg::from_log(0.5 * n * std::log(std::numbers::pi) -
                             log_gamma_fn(0.5 * n + 1.0));
}

LogNonNeg log_sphere_area(int n) {
  if (n < 1) throw DomainError("log_sphere_area: dimension must be >= 1");
  return LogNonNeg::from_log(std::log(static_cast<double>(n)) +
                             log_ball_volume(n).log());
}

double gauss_like_cdf(double x) {
  if (!(x >= 0.0)) throw DomainError("gauss_like_cdf: argument must be >= 0");
  return std::erf(x);
}

double gauss_like_cdf_complement(double x) {
  if (!(x >= 0.0)) throw DomainError("gauss_like_cdf: argument must be >= 0");
  return std::erfc(x);
}

double log_gauss_like_cdf(double x) {
  if (!(x >= 0.0)) throw DomainError("gauss_like_cdf: argument must be >= 0");
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  // erf keeps full relative precision near 0; erfc does so in the tail.
  if (x < 0.5) return std::log(std::erf(x));
  return std::log1p(-std::erfc(x));
}

LogNonNeg log_binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) {
    throw DomainError("log_binomial: requires 0 <= b <= a");
  }
  if (b == 0 || b == a) return LogNonNeg::one();
  const long m = std::min(b, a - b);
  if (m <= 64) {
    // direct product for small m
    double sum = 0.0;
    for (long i = 1; i <= m; ++i) {
      sum += std::log(static_cast<double>(a - m + i) / static_cast<double>(i));
    }
    return LogNonNeg::from_log(sum);
  }
  return LogNonNeg::from_log(log_gamma_fn(a + 1.0) - log_gamma_fn(b + 1.0) -
                             log_gamma_fn(static_cast<double>(a - b) + 1.0));
}

}  // namespace crosspack

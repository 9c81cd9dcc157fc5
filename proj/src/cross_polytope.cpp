#include "crosspack/cross_polytope.hpp"

#include <cmath>
#include <numbers>

#include "crosspack/errors.hpp"
#include "crosspack/special.hpp"

namespace crosspack {

namespace {

void check_dimension(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": dimension must be >= 1");
}

}  // namespace

LogNonNeg log_volume_xn(int n) {
  check_dimension(n, "log_volume_xn");
  return LogNonNeg::from_log(n * std::numbers::ln2 - log_gamma_fn(n + 1.0));
}

double inradius_xn(int n) {
  check_dimension(n, "inradius_xn");
  return 1.0 / std::sqrt(static_cast<double>(n));
}

LogNonNeg log_outer_angle(int n, int j, const QuadratureSpec& spec) {
  check_dimension(n, "log_outer_angle");
  if (j < 0 || j > n - 1) throw DomainError("log_outer_angle: requires 0 <= j <= n-1");
  const double a = j + 1.0;
  const double power = n - j - 1.0;
  auto g = [a, power](double x) {
    const double gauss = -a * x * x;
    return power == 0.0 ? gauss : gauss + power * log_gauss_like_cdf(x);
  };
  const LogNonNeg integral = log_integral_exp(g, 0.0, spec);
  return LogNonNeg::from_log(0.5 * std::log(a / std::numbers::pi) + integral.log());
}

IntrinsicVolumes intrinsic_volumes(int n, const QuadratureSpec& spec,
                                   GammaCache* cache) {
  check_dimension(n, "intrinsic_volumes");
  IntrinsicVolumes iv;
  iv.n = n;
  iv.log_v.resize(n + 1);
  iv.log_gamma_angles.resize(n);
  const std::string fingerprint = cache ? spec.fingerprint() : std::string();
  for (int j = 0; j < n; ++j) {
    std::optional<double> hit;
    if (cache) hit = cache->find(n, j, fingerprint);
    LogNonNeg gamma;
    if (hit) {
      gamma = LogNonNeg::from_log(*hit);
    } else {
      gamma = log_outer_angle(n, j, spec);
      if (cache) cache->insert(n, j, fingerprint, gamma.log());
    }
    iv.log_gamma_angles[j] = gamma;
  }
  iv.log_v[0] = LogNonNeg::one();
  for (int j = 1; j < n; ++j) {
    const double lv = (j + 1.0) * std::numbers::ln2 + log_binomial(n, j + 1).log() +
                      0.5 * std::log(j + 1.0) - log_gamma_fn(j + 1.0) +
                      iv.log_gamma_angles[j].log();
    iv.log_v[j] = LogNonNeg::from_log(lv);
  }
  iv.log_v[n] = log_volume_xn(n);
  return iv;
}

double bh_gamma_asymptotic(int n, int j) {
  if (n < 2 || j < 0) throw DomainError("bh_gamma_asymptotic: requires n >= 2, j >= 0");
  const double l = std::log(0.5) + log_gamma_fn(j + 2.0) - 0.5 * std::log(j + 1.0) +
                   0.5 * j * std::log(std::numbers::pi * std::log(n)) -
                   (j + 1.0) * std::log(static_cast<double>(n));
  return std::exp(l);
}

}  // namespace crosspack

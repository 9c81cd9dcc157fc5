#include "crosspack/spherical_code.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "crosspack/errors.hpp"
#include "crosspack/jacobi.hpp"
#include "crosspack/special.hpp"

namespace crosspack {

SphericalCodeBound::SphericalCodeBound(int n, int k_max) : n_(n), k_max_(k_max) {
  if (n < 3) throw DomainError("spherical code bound: dimension must be >= 3");
  if (k_max < 1) throw DomainError("spherical code bound: k_max must be >= 1");
  roots_ = jacobi_largest_roots(k_max + 1, 0.5 * (n - 3));
}

CodeSizeBound SphericalCodeBound::bound(double phi) const {
  if (!(phi > 0.0 && phi <= std::numbers::pi + 1e-12)) {
    throw DomainError("spherical code bound: phi must lie in (0, pi]");
  }
  // slack for the rounding of cos near pi/2
  const double c = std::cos(phi) - 4.0 * std::numeric_limits<double>::epsilon();
  CodeSizeBound best;
  bool found = false;
  for (int k = 1; k <= k_max_; ++k) {
    if (c > roots_[k]) continue;
    const double value = std::log(4.0) + log_binomial(k + n_ - 2, k).log() -
                         std::log1p(-roots_[k + 1]);
    if (!found || value < best.log_bound.log()) {
      best.log_bound = LogNonNeg::from_log(value);
      best.degree = k;
      found = true;
    }
  }
  if (!found) {
    throw InfeasibleError("spherical code bound: no admissible Jacobi degree <= " +
                          std::to_string(k_max_) + " for phi=" + std::to_string(phi));
  }
  return best;
}

CodeSizeBound kl_M_bound(int n, double phi, int k_max) {
  return SphericalCodeBound(n, k_max).bound(phi);
}

}  // namespace crosspack

#pragma once

#include "crosspack/log_value.hpp"

namespace crosspack {

/// ln Gamma(x) for x > 0.
double log_gamma_fn(double x);

/// ln of the volume of the unit n-ball, kappa_n = pi^{n/2} / Gamma(n/2 + 1).
LogNonNeg log_ball_volume(int n);

/// ln of the surface measure of the unit (n-1)-sphere, omega_n = n kappa_n.
LogNonNeg log_sphere_area(int n);

/// (2/sqrt(pi)) \int_0^x e^{-y^2} dy for x >= 0.
double gauss_like_cdf(double x);
/// 1 - gauss_like_cdf(x), without cancellation for large x.
double gauss_like_cdf_complement(double x);
/// ln gauss_like_cdf(x); -inf at 0, accurate both near 0 and for large x.
double log_gauss_like_cdf(double x);

/// ln C(a, b) for 0 <= b <= a.
LogNonNeg log_binomial(long a, long b);

}  // namespace crosspack

#pragma once

#include <vector>

#include "crosspack/gamma_cache.hpp"
#include "crosspack/log_value.hpp"
#include "crosspack/quadrature.hpp"

namespace crosspack {

// Regular cross-polytope X^n = conv(+-e_1, ..., +-e_n).

/// ln vol(X^n) = ln(2^n / n!).
LogNonNeg log_volume_xn(int n);

/// Inradius 1/sqrt(n).
double inradius_xn(int n);

/// ln gamma(n, j), the outer angle of X^n at a j-face:
///   gamma(n,j) = sqrt((j+1)/pi) \int_0^inf e^{-(j+1)x^2} erf(x)^{n-j-1} dx.
LogNonNeg log_outer_angle(int n, int j, const QuadratureSpec& spec = {});

struct IntrinsicVolumes {
  int n = 0;
  std::vector<LogNonNeg> log_v;             // V_0 .. V_n
  std::vector<LogNonNeg> log_gamma_angles;  // gamma(n, 0) .. gamma(n, n-1)
};

/// V_j(X^n) = 2^{j+1} C(n, j+1) sqrt(j+1)/j! gamma(n, j) for 1 <= j <= n-1;
/// V_0 = 1 and V_n = vol(X^n) are set directly. With a cache, known gamma
/// values are reused and new ones inserted.
IntrinsicVolumes intrinsic_volumes(int n, const QuadratureSpec& spec = {},
                                   GammaCache* cache = nullptr);

/// Large-n approximant of gamma(n, j) for fixed j (diagnostic only):
///   (1/2) (j+1)!/sqrt(j+1) (pi ln n)^{j/2} / n^{j+1}.
double bh_gamma_asymptotic(int n, int j);

}  // namespace crosspack

#pragma once

#include <vector>

namespace crosspack {

/// P_k^{(alpha,alpha)}(x) written as mantissa * exp(log_scale). The
/// recurrence is renormalized whenever magnitudes grow, so large k and
/// alpha never overflow; the sign and the roots are unaffected.
struct ScaledValue {
  double mantissa = 0;
  double log_scale = 0;
  double value() const;
};

ScaledValue jacobi_eval_scaled(int k, double alpha, double x);

/// P_k^{(alpha,alpha)}(x) from the three-term recurrence (may overflow to
/// +-inf for very large k and alpha; use jacobi_eval_scaled there).
double jacobi_eval(int k, double alpha, double x);

/// Largest root of P_k^{(alpha,alpha)}, by bisection between the largest
/// root of degree k-1 and 1.
double jacobi_largest_root(int k, double alpha);

/// Largest roots for every degree 1..k_max; element 0 is unused (NaN).
std::vector<double> jacobi_largest_roots(int k_max, double alpha,
                                         double tolerance = 1e-13);

}  // namespace crosspack

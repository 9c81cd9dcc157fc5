#pragma once

#include <vector>

#include "crosspack/log_value.hpp"

namespace crosspack {

struct CodeSizeBound {
  LogNonNeg log_bound;
  int degree = 0;  // the Jacobi degree k attaining the minimum
};

/// Upper bound on M(n, phi), the largest number of points on S^{n-1} with
/// pairwise angles >= phi:
///   M <= 4 C(k+n-2, k) / (1 - t_{k+1})   whenever cos(phi) <= t_k,
/// t_k the largest root of P_k^{(a,a)}, a = (n-3)/2. The bound is minimized
/// over every admissible k <= k_max. Roots are computed once per object.
class SphericalCodeBound {
 public:
  SphericalCodeBound(int n, int k_max);

  int dimension() const { return n_; }
  int degree_limit() const { return k_max_; }
  double largest_root(int k) const { return roots_.at(k); }

  /// Throws InfeasibleError when no k <= k_max is admissible.
  CodeSizeBound bound(double phi) const;

 private:
  int n_;
  int k_max_;
  std::vector<double> roots_;  // degrees 1..k_max+1
};

CodeSizeBound kl_M_bound(int n, double phi, int k_max);

}  // namespace crosspack

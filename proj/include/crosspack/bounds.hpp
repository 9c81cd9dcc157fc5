#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crosspack/cross_polytope.hpp"
#include "crosspack/gauges.hpp"
#include "crosspack/log_value.hpp"

namespace crosspack {

enum class BoundMethod { InsphereRatio, Blichfeldt };
enum class Rigor { Rigorous, Heuristic };
enum class DerivativeSign { Negative, Positive, Indeterminate };

std::string method_name(BoundMethod m);  // "insphere" / "blichfeldt"
std::string rigor_name(Rigor r);         // "rigorous" / "heuristic"
std::string sign_name(DerivativeSign s);  // "negative" / "positive" / "indeterminate"

// Relative cancellation below which a derivative sign is not trusted.
inline constexpr double kSignCancellationLimit = 1e-8;

/// G(rho) = sum_j c_j rho^j (r - rho)^{n-j}, c_j = I_j V_{n-j} / r^{n-j},
/// the gauge integral over the inner parallel body of X^n. All c_j >= 0, so
/// ln G is a log-sum-exp for every rho in [0, r].
class GProfile {
 public:
  GProfile(int n, double inradius, std::vector<LogNonNeg> log_coeff);

  int n() const { return n_; }
  double inradius() const { return r_; }
  const std::vector<LogNonNeg>& log_coeff() const { return coeff_; }

  double log_value(double rho) const;
  // Index j of the largest term at rho.
  int dominant_term(double rho) const;
  // G'(rho) as the difference of its positive and negative parts.
  SignedDifference derivative(double rho) const;

 private:
  double term(int j, double log_rho, double log_gap) const;

  int n_;
  double r_;
  double log_r_;
  std::vector<LogNonNeg> coeff_;
};

GProfile build_g_profile(int n, const IntrinsicVolumes& iv,
                         const GaugeMoments& gauge);

struct GMaximum {
  double rho = 0;
  double log_g = 0;
  int grid_index = 0;  // best grid point, 1-based
};

/// Uniform scan of rho = r i / grid_points (i = 1..grid_points) followed by
/// golden-section refinement between the neighbours of the best point.
GMaximum maximize_g(const GProfile& profile, int grid_points = 2048,
                    double refine_tol = 1e-12);

struct DerivativeDiagnostics {
  SignedDifference g_prime_0;   // -(n/r) I_0 V_n + I_1 V_{n-1}
  SignedDifference g_second_0;  // n(n-1)/r^2 I_0 V_n - 2(n-1)/r I_1 V_{n-1} + 2 I_2 V_{n-2}
  SignedDifference g_prime_rn;  // r^{n-2} (n r I_n - I_{n-1} V_1)
  DerivativeSign g_prime_0_sign = DerivativeSign::Indeterminate;
  DerivativeSign g_second_0_sign = DerivativeSign::Indeterminate;
  DerivativeSign g_prime_rn_sign = DerivativeSign::Indeterminate;
};

DerivativeDiagnostics g_derivative_diagnostics(int n, const IntrinsicVolumes& iv,
                                               const GaugeMoments& gauge);

// The part of the derivative diagnostics carried by reports.
struct DiagnosticSummary {
  double g_prime_0 = 0;  // relative difference, 0 means exact cancellation
  DerivativeSign g_second_0_sign = DerivativeSign::Indeterminate;
  DerivativeSign g_prime_rn_sign = DerivativeSign::Indeterminate;
};

struct BoundReport {
  int n = 0;
  BoundMethod method = BoundMethod::Blichfeldt;
  std::optional<GaugeId> gauge;
  std::optional<double> rho_star;
  LogNonNeg log_bound;  // raw ratio, may exceed 1
  std::optional<DiagnosticSummary> diagnostics;
  Rigor rigor = Rigor::Rigorous;
  std::optional<int> dominant_term;
  std::optional<int> kl_degree;
  std::string ball_source;  // insphere only

  /// exp(log_bound) capped at 1; may underflow to 0.
  double bound() const;
};

struct BlichfeldtOptions {
  int grid_points = 2048;
  double refine_tol = 1e-12;
  // Evaluate at rho = fraction * r instead of maximizing.
  std::optional<double> fixed_rho_fraction;
};

/// vol(K) delta(B^n) / (r^n kappa_n).
BoundReport insphere_bound(LogNonNeg log_vol, double inradius, int n,
                           LogNonNeg log_delta_ball, Rigor ball_rigor,
                           std::string ball_source = {});

/// vol(X^n) / G(rho*) for the gauge.
BoundReport blichfeldt_bound(int n, const IntrinsicVolumes& iv,
                             const GaugeMoments& gauge,
                             const BlichfeldtOptions& opt = {});

/// Best Levenshtein-gauge bound over the angle grid.
BoundReport optimize_levenshtein_bound(int n, const IntrinsicVolumes& iv,
                                       const std::vector<double>& phi_grid,
                                       int k_max,
                                       const BlichfeldtOptions& opt = {});

using IntrinsicVolumeProvider = std::function<IntrinsicVolumes(int)>;

/// Per dimension, the best asymptotic spherical-code gauge bound over the
/// angle grid. Reports are flagged heuristic.
std::vector<BoundReport> kl_asymptotic_sweep(const std::vector<int>& dimensions,
                                             const IntrinsicVolumeProvider& provider,
                                             const std::vector<double>& phi_grid,
                                             KlWindow window = KlWindow::Strict,
                                             const BlichfeldtOptions& opt = {});

/// Evenly spaced angles covering [lo, hi] inclusive.
std::vector<double> angle_grid(double lo, double hi, int points);

}  // namespace crosspack

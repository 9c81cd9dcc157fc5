#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crosspack/log_value.hpp"

namespace crosspack {

class SphericalCodeBound;

enum class GaugeKind { F0, FStar, LevenshteinPrecise, KLAsymptotic };

std::string gauge_kind_name(GaugeKind kind);  // "f0", "fstar", ...
GaugeKind parse_gauge_kind(const std::string& name);

// Which angles the asymptotic spherical-code gauge accepts. Strict keeps the
// 63 degree limit under which the asymptotic code bound is stated; Extended
// runs up to the angle where the gauge value reaches 1.
enum class KlWindow { Strict, Extended };

struct GaugeId {
  GaugeKind kind = GaugeKind::FStar;
  std::optional<double> phi;  // radians, spherical-code gauges only
};

/// A Blichfeldt gauge for B^n together with its moments
/// I_j(f) = \int_{R^j} f(|x|) dx, j = 0..n (I_0 = f(0)).
struct GaugeMoments {
  GaugeId id;
  int n = 0;
  double support_radius = 0;
  std::vector<LogNonNeg> log_moments;
  double gauge_peak = 1;         // f(0)
  std::optional<int> kl_degree;  // Jacobi degree used by LevenshteinPrecise
  bool rigorous = true;
};

/// b_j = 1/((sqrt2)^j (j+1)) - (sqrt2-1)^{j+1} (1 + sqrt2/(j+1)).
double b_coeff(int j);

/// f0(r) = 1 - r^2/2 on [0, sqrt2].
GaugeMoments moments_f0(int n);

/// f*(r) = f0(r) for r >= 1 and 1 - f0(2 - r) for r <= 1;
/// I_j = 2 kappa_j/(j+2) (sqrt2)^j (1 + b_j).
GaugeMoments moments_fstar(int n);

/// Constant gauge 1/M(n, phi) on the ball of radius sqrt(2/(1-cos phi)),
/// with M bounded through Jacobi roots. phi in [pi/3, pi].
GaugeMoments moments_levenshtein(int n, double phi, int k_max);
GaugeMoments moments_levenshtein(int n, double phi);  // k_max = 4n + 200
/// Same gauge, reusing the Jacobi roots held by `codes`.
GaugeMoments moments_levenshtein(const SphericalCodeBound& codes, double phi);

/// Constant gauge min(1, sin(phi/2)^n 2^{0.599 n}) on the ball of radius
/// 1/sin(phi/2), dropping the unknown o(n) term. Not rigorous.
GaugeMoments moments_kl_asymptotic(int n, double phi,
                                   KlWindow window = KlWindow::Strict);

/// Largest angle accepted by moments_kl_asymptotic for the window.
double kl_asymptotic_phi_max(KlWindow window);

/// First j in 2..n violating
///   I_j / I_{j-1} <= r0 (kappa_j / kappa_{j-1}) j/(j-1),
/// or nullopt if the whole moment vector is consistent with its support.
std::optional<int> moment_ratio_violation(const GaugeMoments& gauge,
                                          double relative_slack = 1e-12);

int default_kl_degree_limit(int n);

}  // namespace crosspack


#include "crosspack/gauges.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "crosspack/errors.hpp"
#include "crosspack/special.hpp"
#include "crosspack/spherical_code.hpp"

namespace crosspack {

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr double kKlExponent = 0.599;

void check_dimension(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + ": dimension must be >= " +
                      std::to_string(minimum));
  }
}

void assert_support_consistent(const GaugeMoments& g) {
  if (auto j = moment_ratio_violation(g)) {
    throw std::logic_error("gauge " + gauge_kind_name(g.id.kind) +
                           ": moment ratio exceeds support bound at j=" +
                           std::to_string(*j));
  }
}

// I_j = kappa_j R^j f for a gauge equal to f on the ball of radius R.
std::vector<LogNonNeg> constant_gauge_moments(int n, double radius,
                                              double log_value) {
  std::vector<LogNonNeg> m(n + 1);
  const double log_r = std::log(radius);
  for (int j = 0; j <= n; ++j) {
    m[j] = LogNonNeg::from_log(log_ball_volume(j).log() + j * log_r + log_value);
  }
  return m;
}

}  // namespace

std::string gauge_kind_name(GaugeKind kind) {
  switch (kind) {
    case GaugeKind::F0: return "f0";
    case GaugeKind::FStar: return "fstar";
    case GaugeKind::LevenshteinPrecise: return "levenshtein";
    case GaugeKind::KLAsymptotic: return "kl-asymptotic";
  }
  return "unknown";
}

GaugeKind parse_gauge_kind(const std::string& name) {
  if (name == "f0") return GaugeKind::F0;
  if (name == "fstar") return GaugeKind::FStar;
  if (name == "levenshtein") return GaugeKind::LevenshteinPrecise;
  if (name == "kl-asymptotic") return GaugeKind::KLAsymptotic;
  throw DomainError("unknown gauge '" + name + "'");
}

double b_coeff(int j) {
  if (j < 1) throw DomainError("b_coeff: index must be >= 1");
  const double s = std::numbers::sqrt2;
  return 1.0 / (std::pow(s, j) * (j + 1.0)) -
         std::pow(s - 1.0, j + 1) * (1.0 + s / (j + 1.0));
}

GaugeMoments moments_f0(int n) {
  check_dimension(n, 1, "moments_f0");
  GaugeMoments g;
  g.id = {GaugeKind::F0, std::nullopt};
  g.n = n;
  g.support_radius = std::numbers::sqrt2;
  g.log_moments.resize(n + 1);
  g.log_moments[0] = LogNonNeg::one();
  for (int j = 1; j <= n; ++j) {
    g.log_moments[j] = LogNonNeg::from_log(log_ball_volume(j).log() +
                                           (0.5 * j + 1.0) * std::numbers::ln2 -
                                           std::log(j + 2.0));
  }
  assert_support_consistent(g);
  return g;
}

GaugeMoments moments_fstar(int n) {
  check_dimension(n, 1, "moments_fstar");
  GaugeMoments g;
  g.id = {GaugeKind::FStar, std::nullopt};
  g.n = n;
  g.support_radius = std::numbers::sqrt2;
  g.log_moments.resize(n + 1);
  g.log_moments[0] = LogNonNeg::one();
  for (int j = 1; j <= n; ++j) {
    g.log_moments[j] = LogNonNeg::from_log(
        log_ball_volume(j).log() + (0.5 * j + 1.0) * std::numbers::ln2 -
        std::log(j + 2.0) + std::log1p(b_coeff(j)));
  }
  assert_support_consistent(g);
  return g;
}

int default_kl_degree_limit(int n) { return 4 * n + 200; }

GaugeMoments moments_levenshtein(const SphericalCodeBound& codes, double phi) {
  const int n = codes.dimension();
  if (!(phi >= std::numbers::pi / 3.0 - kAngleSlack &&
        phi <= std::numbers::pi + kAngleSlack)) {
    throw DomainError("moments_levenshtein: gauge requires pi/3 <= phi <= pi");
  }
  const CodeSizeBound m = codes.bound(phi);
  const double log_value = -m.log_bound.log();
  if (log_value > 0.0) {
    throw std::logic_error("moments_levenshtein: gauge value exceeds 1");
  }
  GaugeMoments g;
  g.id = {GaugeKind::LevenshteinPrecise, phi};
  g.n = n;
  g.support_radius = std::sqrt(2.0 / (1.0 - std::cos(phi)));
  g.log_moments = constant_gauge_moments(n, g.support_radius, log_value);
  g.gauge_peak = std::exp(log_value);
  g.kl_degree = m.degree;
  assert_support_consistent(g);
  return g;
}

GaugeMoments moments_levenshtein(int n, double phi, int k_max) {
  check_dimension(n, 3, "moments_levenshtein");
  if (!(phi >= std::numbers::pi / 3.0 - kAngleSlack &&
        phi <= std::numbers::pi + kAngleSlack)) {
    throw DomainError("moments_levenshtein: gauge requires pi/3 <= phi <= pi");
  }
  return moments_levenshtein(SphericalCodeBound(n, k_max), phi);
}

GaugeMoments moments_levenshtein(int n, double phi) {
  return moments_levenshtein(n, phi, default_kl_degree_limit(n));
}

double kl_asymptotic_phi_max(KlWindow window) {
  if (window == KlWindow::Strict) return 63.0 * std::numbers::pi / 180.0;
  return 2.0 * std::asin(std::exp2(-kKlExponent));
}

GaugeMoments moments_kl_asymptotic(int n, double phi, KlWindow window) {
  check_dimension(n, 1, "moments_kl_asymptotic");
  const double phi_max = kl_asymptotic_phi_max(window);
  if (!(phi >= std::numbers::pi / 3.0 - kAngleSlack && phi <= phi_max + kAngleSlack)) {
    throw DomainError("moments_kl_asymptotic: phi outside the validity window");
  }
  const double s = std::sin(0.5 * phi);
  const double log_value =
      std::min(0.0, n * (std::log(s) + kKlExponent * std::numbers::ln2));
  GaugeMoments g;
  g.id = {GaugeKind::KLAsymptotic, phi};
  g.n = n;
  g.support_radius = 1.0 / s;
  g.log_moments = constant_gauge_moments(n, g.support_radius, log_value);
  g.gauge_peak = std::exp(log_value);
  g.rigorous = false;
  assert_support_consistent(g);
  return g;
}

std::optional<int> moment_ratio_violation(const GaugeMoments& gauge,
                                          double relative_slack) {
  const double log_r0 = std::log(gauge.support_radius);
  for (int j = 2; j <= gauge.n; ++j) {
    const double lhs = gauge.log_moments[j].log() - gauge.log_moments[j - 1].log();
    const double rhs = log_r0 + log_ball_volume(j).log() -
                       log_ball_volume(j - 1).log() +
                       std::log(static_cast<double>(j) / (j - 1));
    if (lhs > rhs + relative_slack) return j;
  }
  return std::nullopt;
}

}  // namespace crosspack

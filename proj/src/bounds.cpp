#include "crosspack/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "crosspack/errors.hpp"
#include "crosspack/optimize.hpp"
#include "crosspack/special.hpp"
#include "crosspack/spherical_code.hpp"

namespace crosspack {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// k ln x with the convention x^0 = 1 (also for x = 0).
double scaled_log(int k, double log_x) { return k == 0 ? 0.0 : k * log_x; }

DerivativeSign sign_of(const SignedDifference& d) {
  if (std::abs(d.relative) <= kSignCancellationLimit) return DerivativeSign::Indeterminate;
  return d.sign > 0 ? DerivativeSign::Positive : DerivativeSign::Negative;
}

void check_consistent(int n, const IntrinsicVolumes& iv, const GaugeMoments& gauge) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (iv.n != n || gauge.n != n || static_cast<int>(iv.log_v.size()) != n + 1 ||
      static_cast<int>(gauge.log_moments.size()) != n + 1) {
    throw DomainError("dimension mismatch between intrinsic volumes and gauge");
  }
}

}  // namespace

std::string method_name(BoundMethod m) {
  return m == BoundMethod::InsphereRatio ? "insphere" : "blichfeldt";
}

std::string rigor_name(Rigor r) {
  return r == Rigor::Rigorous ? "rigorous" : "heuristic";
}

std::string sign_name(DerivativeSign s) {
  switch (s) {
    case DerivativeSign::Negative: return "negative";
    case DerivativeSign::Positive: return "positive";
    case DerivativeSign::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

GProfile::GProfile(int n, double inradius, std::vector<LogNonNeg> log_coeff)
    : n_(n), r_(inradius), log_r_(std::log(inradius)), coeff_(std::move(log_coeff)) {
  if (n < 1 || static_cast<int>(coeff_.size()) != n + 1) {
    throw DomainError("GProfile: need n+1 coefficients");
  }
  if (!(inradius > 0.0)) throw DomainError("GProfile: inradius must be positive");
}

double GProfile::term(int j, double log_rho, double log_gap) const {
  if (coeff_[j].is_zero()) return kNegInf;
  return coeff_[j].log() + scaled_log(j, log_rho) + scaled_log(n_ - j, log_gap);
}

double GProfile::log_value(double rho) const {
  if (!(rho >= 0.0 && rho <= r_)) throw DomainError("GProfile: rho outside [0, r]");
  const double log_rho = std::log(rho);
  const double log_gap = std::log(r_ - rho);
  double hi = kNegInf;
  for (int j = 0; j <= n_; ++j) hi = std::max(hi, term(j, log_rho, log_gap));
  if (hi == kNegInf) return kNegInf;
  double s = 0.0;
  for (int j = 0; j <= n_; ++j) s += std::exp(term(j, log_rho, log_gap) - hi);
  return hi + std::log(s);
}

int GProfile::dominant_term(double rho) const {
  const double log_rho = std::log(rho);
  const double log_gap = std::log(r_ - rho);
  int best = 0;
  double best_value = kNegInf;
  for (int j = 0; j <= n_; ++j) {
    const double t = term(j, log_rho, log_gap);
    if (t > best_value) {
      best_value = t;
      best = j;
    }
  }
  return best;
}

SignedDifference GProfile::derivative(double rho) const {
  if (!(rho >= 0.0 && rho <= r_)) throw DomainError("GProfile: rho outside [0, r]");
  const double log_rho = std::log(rho);
  const double log_gap = std::log(r_ - rho);
  // d/drho rho^j (r-rho)^{n-j} = j rho^{j-1} (r-rho)^{n-j} - (n-j) rho^j (r-rho)^{n-j-1}
  std::vector<double> pos, neg;
  pos.reserve(n_ + 1);
  neg.reserve(n_ + 1);
  for (int j = 0; j <= n_; ++j) {
    if (coeff_[j].is_zero()) continue;
    const double c = coeff_[j].log();
    if (j >= 1) {
      pos.push_back(c + std::log(static_cast<double>(j)) + scaled_log(j - 1, log_rho) +
                    scaled_log(n_ - j, log_gap));
    }
    if (j <= n_ - 1) {
      neg.push_back(c + std::log(static_cast<double>(n_ - j)) + scaled_log(j, log_rho) +
                    scaled_log(n_ - j - 1, log_gap));
    }
  }
  return difference(LogNonNeg::from_log(log_sum_exp(pos)),
                    LogNonNeg::from_log(log_sum_exp(neg)));
}

GProfile build_g_profile(int n, const IntrinsicVolumes& iv, const GaugeMoments& gauge) {
  check_consistent(n, iv, gauge);
  const double r = inradius_xn(n);
  const double log_r = std::log(r);
  std::vector<LogNonNeg> coeff(n + 1);
  for (int j = 0; j <= n; ++j) {
    const LogNonNeg product = gauge.log_moments[j] * iv.log_v[n - j];
    coeff[j] = product.is_zero() ? product
                                 : LogNonNeg::from_log(product.log() - (n - j) * log_r);
  }
  return GProfile(n, r, std::move(coeff));
}

GMaximum maximize_g(const GProfile& profile, int grid_points, double refine_tol) {
  if (grid_points < 64) throw DomainError("maximize_g: grid_points must be >= 64");
  if (!(refine_tol > 0.0)) throw DomainError("maximize_g: refine_tol must be > 0");
  const double r = profile.inradius();
  auto rho_at = [&](int i) { return i == grid_points ? r : r * i / grid_points; };
  GMaximum best{rho_at(1), kNegInf, 1};
  for (int i = 1; i <= grid_points; ++i) {
    const double rho = rho_at(i);
    const double v = profile.log_value(rho);
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      throw NumericalError("maximize_g: non-finite ln G at rho=" + std::to_string(rho));
    }
    if (v > best.log_g) best = {rho, v, i};
  }
  if (!std::isfinite(best.log_g)) throw NumericalError("maximize_g: G vanishes on the grid");
  const double a = rho_at(std::max(best.grid_index - 1, 1));
  const double b = rho_at(std::min(best.grid_index + 1, grid_points));
  if (b > a) {
    auto refined = golden_section_maximize(
        [&](double rho) { return profile.log_value(rho); }, a, b, refine_tol * r);
    if (refined.value > best.log_g) {
      best.rho = refined.x;
      best.log_g = refined.value;
    }
  }
  return best;
}

DerivativeDiagnostics g_derivative_diagnostics(int n, const IntrinsicVolumes& iv,
                                               const GaugeMoments& gauge) {
  check_consistent(n, iv, gauge);
  const double lr = std::log(inradius_xn(n));
  const auto& v = iv.log_v;
  const auto& m = gauge.log_moments;
  const double ln_n = std::log(static_cast<double>(n));
  auto at = [](double l) { return LogNonNeg::from_log(l); };

  DerivativeDiagnostics d;
  d.g_prime_0 = difference(m[1] * v[n - 1], at(ln_n - lr + m[0].log() + v[n].log()));
  if (n >= 2) {
    const LogNonNeg positive =
        at(std::log(n * (n - 1.0)) - 2.0 * lr + m[0].log() + v[n].log()) +
        at(std::numbers::ln2 + m[2].log() + v[n - 2].log());
    const LogNonNeg negative =
        at(std::log(2.0 * (n - 1.0)) - lr + m[1].log() + v[n - 1].log());
    d.g_second_0 = difference(positive, negative);
  }
  d.g_prime_rn = difference(at(ln_n + (n - 1.0) * lr + m[n].log()),
                            at((n - 2.0) * lr + m[n - 1].log() + v[1].log()));
  d.g_prime_0_sign = sign_of(d.g_prime_0);
  d.g_second_0_sign = n >= 2 ? sign_of(d.g_second_0) : DerivativeSign::Indeterminate;
  d.g_prime_rn_sign = sign_of(d.g_prime_rn);
  return d;
}

double BoundReport::bound() const { return std::min(1.0, log_bound.to_real()); }

BoundReport insphere_bound(LogNonNeg log_vol, double inradius, int n,
                           LogNonNeg log_delta_ball, Rigor ball_rigor,
                           std::string ball_source) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(inradius > 0.0) || !std::isfinite(inradius)) {
    throw DomainError("insphere_bound: inradius must be positive");
  }
  if (log_delta_ball.is_zero() || log_delta_ball.log() > 1e-15) {
    throw DomainError("insphere_bound: ball density must lie in (0, 1]");
  }
  BoundReport rep;
  rep.n = n;
  rep.method = BoundMethod::InsphereRatio;
  rep.log_bound = LogNonNeg::from_log(log_vol.log() + log_delta_ball.log() -
                                      n * std::log(inradius) - log_ball_volume(n).log());
  rep.rigor = ball_rigor;
  rep.ball_source = std::move(ball_source);
  return rep;
}

BoundReport blichfeldt_bound(int n, const IntrinsicVolumes& iv, const GaugeMoments& gauge,
                             const BlichfeldtOptions& opt) {
  const GProfile profile = build_g_profile(n, iv, gauge);
  GMaximum best;
  if (opt.fixed_rho_fraction) {
    const double c = *opt.fixed_rho_fraction;
    if (!(c > 0.0 && c <= 1.0)) throw DomainError("fixed rho fraction must lie in (0, 1]");
    best.rho = c * profile.inradius();
    best.log_g = profile.log_value(best.rho);
  } else {
    best = maximize_g(profile, opt.grid_points, opt.refine_tol);
  }
  const auto diag = g_derivative_diagnostics(n, iv, gauge);

  BoundReport rep;
  rep.n = n;
  rep.method = BoundMethod::Blichfeldt;
  rep.gauge = gauge.id;
  rep.rho_star = best.rho;
  rep.log_bound = LogNonNeg::from_log(iv.log_v[n].log() - best.log_g);
  rep.diagnostics = DiagnosticSummary{diag.g_prime_0.relative, diag.g_second_0_sign,
                                      diag.g_prime_rn_sign};
  rep.rigor = gauge.rigorous ? Rigor::Rigorous : Rigor::Heuristic;
  rep.dominant_term = profile.dominant_term(best.rho);
  rep.kl_degree = gauge.kl_degree;
  return rep;
}

BoundReport optimize_levenshtein_bound(int n, const IntrinsicVolumes& iv,
                                       const std::vector<double>& phi_grid, int k_max,
                                       const BlichfeldtOptions& opt) {
  if (phi_grid.empty()) throw DomainError("optimize_levenshtein_bound: empty angle grid");
  for (double phi : phi_grid) {
    if (!(phi >= std::numbers::pi / 3.0 - 1e-12 && phi <= std::numbers::pi + 1e-12)) {
      throw DomainError("optimize_levenshtein_bound: angles must lie in [pi/3, pi]");
    }
  }
  for (int attempt = 0; attempt < 4; ++attempt, k_max *= 2) {
    const SphericalCodeBound codes(n, k_max);
    std::optional<BoundReport> best;
    auto consider = [&](const GaugeMoments& gauge) {
      BoundReport rep = blichfeldt_bound(n, iv, gauge, opt);
      if (!best || rep.log_bound < best->log_bound) best = std::move(rep);
    };
    for (double phi : phi_grid) {
      GaugeMoments gauge;
      try {
        gauge = moments_levenshtein(codes, phi);
      } catch (const InfeasibleError&) {
        continue;
      }
      consider(gauge);
      // smallest angle still admitting the same degree
      const double snapped = std::max(std::numbers::pi / 3.0,
                                      std::acos(codes.largest_root(*gauge.kl_degree)));
      if (snapped < phi) consider(moments_levenshtein(codes, snapped));
    }
    if (best) return *best;
  }
  throw InfeasibleError("optimize_levenshtein_bound: every angle infeasible");
}

std::vector<BoundReport> kl_asymptotic_sweep(const std::vector<int>& dimensions,
                                             const IntrinsicVolumeProvider& provider,
                                             const std::vector<double>& phi_grid,
                                             KlWindow window,
                                             const BlichfeldtOptions& opt) {
  if (phi_grid.empty()) throw DomainError("kl_asymptotic_sweep: empty angle grid");
  std::vector<BoundReport> out;
  out.reserve(dimensions.size());
  for (int n : dimensions) {
    const IntrinsicVolumes iv = provider(n);
    std::optional<BoundReport> best;
    for (double phi : phi_grid) {
      BoundReport rep = blichfeldt_bound(n, iv, moments_kl_asymptotic(n, phi, window), opt);
      if (!best || rep.log_bound < best->log_bound) best = std::move(rep);
    }
    out.push_back(std::move(*best));
  }
  return out;
}

std::vector<double> angle_grid(double lo, double hi, int points) {
  if (points < 1 || !(hi >= lo)) throw DomainError("angle_grid: invalid range");
  if (points == 1) return {lo};
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    g[i] = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
  }
  return g;
}

}  // namespace crosspack

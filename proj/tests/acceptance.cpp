#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "crosspack/ball_table.hpp"
#include "crosspack/bounds.hpp"
#include "crosspack/cross_polytope.hpp"
#include "crosspack/gauges.hpp"
#include "crosspack/regular_polytopes.hpp"
#include "crosspack/special.hpp"

using namespace crosspack;
namespace fs = std::filesystem;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

enum class Outcome { Pass, Fail, Skip };

struct Check {
  Outcome outcome = Outcome::Pass;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      outcome = Outcome::Fail;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

BoundReport fstar_bound(int n) {
  return blichfeldt_bound(n, intrinsic_volumes(n), moments_fstar(n));
}

// Composite Simpson, plain and independent of the library quadrature.
template <typename F>
long double simpson(F f, long double a, long double b, int intervals) {
  const long double h = (b - a) / intervals;
  long double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return s * h / 3.0L;
}

long double f0(long double r) { return r <= std::sqrt(2.0L) ? 1.0L - 0.5L * r * r : 0.0L; }
long double fstar(long double r) { return r >= 1.0L ? f0(r) : 1.0L - f0(2.0L - r); }

// \int_{R^j} f*(|x|) dx with the radial integral split at the kinks.
double fstar_moment_by_quadrature(int j) {
  if (j == 0) return 1.0;
  auto integrand = [j](long double r) { return fstar(r) * std::pow(r, j - 1); };
  const long double k1 = 2.0L - std::sqrt(2.0L);
  const long double s = simpson(integrand, 0.0L, k1, 4000) + simpson(integrand, k1, 1.0L, 4000) +
                        simpson(integrand, 1.0L, std::sqrt(2.0L), 4000);
  const double log_area =
      std::log(2.0) + 0.5 * j * std::log(std::numbers::pi) - std::lgamma(0.5 * j);
  return std::exp(log_area) * static_cast<double>(s);
}

Check fstar_small() {
  // n = 7..36
  static const double reference[] = {0.99805, 0.98606, 0.96188, 0.92730, 0.88500, 0.83754, 0.78705,
                                     0.73524, 0.68339, 0.63247, 0.58317, 0.53596, 0.49116, 0.44896,
                                     0.40944, 0.37264, 0.33850, 0.30697, 0.27794, 0.25129, 0.22690,
                                     0.20462, 0.18448, 0.16586, 0.14908, 0.13398, 0.12017, 0.10770,
                                     0.09647, 0.08635};
  Check c;
  double worst = 0;
  for (int n = 7; n <= 36; ++n) {
    const double b = fstar_bound(n).bound();
    const double err = std::fabs(b - reference[n - 7]);
    worst = std::max(worst, err);
    c.require(err <= 2e-4, fmt("n=%.0f got %.6f want %.5f", n, b, reference[n - 7]));
  }
  if (c.outcome == Outcome::Pass) c.detail = fmt("max abs error %.2e", worst);
  return c;
}

Check fstar_large() {
  const std::vector<std::pair<int, double>> reference{
      {40, 5.52108e-2}, {100, 3.48295e-5}, {200, 7.37113e-11}, {500, 2.25312e-28}, {1000, 6.36493e-58}};
  Check c;
  double worst = 0;
  for (auto [n, want] : reference) {
    const double lb = fstar_bound(n).log_bound.log();
    const double lp = std::log(want);
    const double rel = std::fabs(lb - lp) / std::fabs(lp);
    worst = std::max(worst, rel);
    c.require(rel <= 3e-3, fmt("n=%.0f ln bound %.6f vs %.6f", n, lb, lp));
  }
  if (c.outcome == Outcome::Pass) c.detail = fmt("max log-space relative error %.2e", worst);
  return c;
}

Check insphere24() {
  Check c;
  const auto leech = leech_lattice_density();
  const auto rep = insphere_bound(log_volume_xn(24), inradius_xn(24), 24,
                                  LogNonNeg::from_real(leech.delta_upper), leech.rigor);
  c.require(std::fabs(rep.bound() - 0.98753) <= 1e-5, fmt("got %.7f", rep.bound()));
  if (c.outcome == Outcome::Pass) c.detail = fmt("%.7f", rep.bound());
  return c;
}

std::optional<fs::path> ball_table_path() {
  if (const char* p = std::getenv("CROSSPACK_BALL_TABLE")) return fs::path(p);
  if (const char* d = std::getenv("CROSSPACK_DATA_DIR")) return fs::path(d) / "ball_table.csv";
  return std::nullopt;
}

Check insphere_table() {
  static const double reference[] = {0.98753, 0.95416, 0.90259, 0.85275, 0.80476, 0.75871, 0.71466,
                                     0.67265, 0.63268, 0.59472, 0.55877, 0.52476, 0.49264};
  Check c;
  const auto path = ball_table_path();
  if (!path || !fs::exists(*path)) {
    c.outcome = Outcome::Skip;
    c.detail = "no ball density table";
    return c;
  }
  const auto table = BallTable::load(*path);
  double worst = 0;
  for (int n = 24; n <= 36; ++n) {
    const auto rec = table.best_for(n);
    if (!rec) {
      c.require(false, fmt("no entry for n=%.0f", n));
      continue;
    }
    const double b = insphere_bound(log_volume_xn(n), inradius_xn(n), n,
                                    LogNonNeg::from_real(rec->delta_upper), rec->rigor)
                         .bound();
    const double err = std::fabs(b - reference[n - 24]);
    worst = std::max(worst, err);
    c.require(err <= 1e-4, fmt("n=%.0f got %.6f want %.5f", n, b, reference[n - 24]));
  }
  if (c.outcome == Outcome::Pass) c.detail = fmt("max abs error %.2e", worst);
  return c;
}

Check four_polytopes() {
  Check c;
  const auto delta4 = LogNonNeg::from_real(0.13126 * std::numbers::pi * std::numbers::pi / 2);
  const auto c120 = regular_120_cell();
  const auto c600 = regular_600_cell();
  const double b120 = insphere_bound(LogNonNeg::from_log(c120.log_volume), c120.inradius, 4,
                                     delta4, Rigor::Rigorous)
                          .bound();
  const double b600 = insphere_bound(LogNonNeg::from_log(c600.log_volume), c600.inradius, 4,
                                     delta4, Rigor::Rigorous)
                          .bound();
  c.require(std::fabs(b120 - 0.74972) <= 1e-4, fmt("120-cell %.6f", b120));
  c.require(std::fabs(b600 - 0.69073) <= 1e-4, fmt("600-cell %.6f", b600));
  if (c.outcome == Outcome::Pass) c.detail = fmt("120-cell %.6f, 600-cell %.6f", b120, b600);
  return c;
}

Check derivatives() {
  Check c;
  double worst = 0;
  std::map<int, DerivativeSign> second;
  for (int n = 3; n <= 50; ++n) {
    const auto d = g_derivative_diagnostics(n, intrinsic_volumes(n), moments_fstar(n));
    worst = std::max(worst, std::fabs(d.g_prime_0.relative));
    c.require(std::fabs(d.g_prime_0.relative) <= 1e-10, fmt("G'(0) at n=%.0f", n));
    second[n] = d.g_second_0_sign;
  }
  c.require(second[6] == DerivativeSign::Negative, "G''(0) at n=6 not negative");
  c.require(second[7] == DerivativeSign::Positive, "G''(0) at n=7 not positive");
  if (c.outcome == Outcome::Pass) c.detail = fmt("max |G'(0)| relative %.2e", worst);
  return c;
}

Check outer_angles() {
  Check c;
  double worst1 = 0, worst2 = 0;
  for (int n = 3; n <= 200; ++n) {
    const double g1 = log_outer_angle(n, n - 1).to_real();
    const double g2 = log_outer_angle(n, n - 2).to_real();
    const double e1 = std::fabs(g1 - 0.5);
    const double e2 = std::fabs(g2 - std::acos(1.0 - 2.0 / n) / (2 * std::numbers::pi));
    worst1 = std::max(worst1, e1);
    worst2 = std::max(worst2, e2);
    c.require(e1 <= 1e-10, fmt("gamma(%.0f, n-1) off by %.2e", n, e1));
    c.require(e2 <= 1e-8, fmt("gamma(%.0f, n-2) off by %.2e", n, e2));
  }
  if (c.outcome == Outcome::Pass) c.detail = fmt("max errors %.2e and %.2e", worst1, worst2);
  return c;
}

Check moments() {
  Check c;
  double worst = 0;
  const auto fs40 = moments_fstar(40);
  for (int n = 1; n <= 40; ++n) {
    const auto g = n == 40 ? fs40 : moments_fstar(n);
    for (int j = 0; j <= n; ++j) {
      const double rel = std::fabs(g.log_moments[j].to_real() / fstar_moment_by_quadrature(j) - 1);
      worst = std::max(worst, rel);
      c.require(rel <= 1e-10, fmt("I_%.0f(f*) at n=%.0f relative %.2e", j, n, rel));
    }
  }
  double worst0 = 0;
  const auto g0 = moments_f0(50);
  for (int n = 1; n <= 50; ++n) {
    const double ratio = std::exp(log_ball_volume(n).log() - g0.log_moments[n].log());
    const double want = (n + 2) * std::pow(2.0, -(n + 2) / 2.0);
    const double rel = std::fabs(ratio / want - 1);
    worst0 = std::max(worst0, rel);
    c.require(rel <= 1e-12, fmt("f0 ratio at n=%.0f relative %.2e", n, rel));
  }
  if (c.outcome == Outcome::Pass) c.detail = fmt("f* %.2e, f0 %.2e", worst, worst0);
  return c;
}

Check rho_drift() {
  Check c;
  std::string values;
  for (int n : {500, 1000}) {
    const double s = *fstar_bound(n).rho_star * std::sqrt(static_cast<double>(n));
    c.require(s >= 0.60 && s <= 0.74, fmt("n=%.0f rho* sqrt n = %.4f", n, s));
    values += fmt(" n=%.0f: %.4f", n, s);
  }
  if (c.outcome == Outcome::Pass) c.detail = "rho* sqrt n" + values;
  return c;
}

Check heuristic_gauge() {
  Check c;
  const auto provider = [](int n) { return intrinsic_volumes(n); };
  const double cap = kl_asymptotic_phi_max(KlWindow::Extended);
  const auto reps =
      kl_asymptotic_sweep({500, 1000}, provider, angle_grid(60 * kDeg, cap, 32), KlWindow::Extended);
  for (const auto& r : reps) {
    const double frac = *r.rho_star / inradius_xn(r.n);
    c.require(frac >= 0.70 && frac <= 0.82, fmt("n=%.0f rho*/r = %.4f", r.n, frac));
    c.require(r.rigor == Rigor::Heuristic, "report not flagged heuristic");
  }
  const double slope = (reps[1].log_bound.log() - reps[0].log_bound.log()) / 500.0;
  c.require(slope >= std::log(0.82) && slope <= std::log(0.84),
            fmt("rate %.5f per dimension", std::exp(slope)));
  if (c.outcome == Outcome::Pass) {
    c.detail = fmt("rho*/r %.4f and %.4f, rate %.5f", *reps[0].rho_star / inradius_xn(500),
                   *reps[1].rho_star / inradius_xn(1000), std::exp(slope));
  }
  return c;
}

Check levenshtein_vs_fstar() {
  Check c;
  const int n = 50;
  const auto iv = intrinsic_volumes(n);
  const auto lev = optimize_levenshtein_bound(n, iv, angle_grid(60 * kDeg, 180 * kDeg, 64),
                                              default_kl_degree_limit(n));
  const auto fs = blichfeldt_bound(n, iv, moments_fstar(n));
  c.require(lev.log_bound > fs.log_bound, "Levenshtein gauge not worse than f*");
  c.detail = fmt("Levenshtein %.5g vs f* %.5g", lev.bound(), fs.bound());
  return c;
}

Check constants() {
  Check c;
  const double base = std::sqrt(std::numbers::e / (std::numbers::pi * std::pow(2.0, 0.198)));
  c.require(std::fabs(base - 0.86850) <= 5e-5, fmt("base %.6f", base));
  const double slope = (fstar_bound(1000).log_bound.log() - fstar_bound(500).log_bound.log()) / 500.0;
  c.require(slope >= std::log(0.865) && slope <= std::log(0.882),
            fmt("f* rate %.5f", std::exp(slope)));
  if (c.outcome == Outcome::Pass) c.detail = fmt("base %.6f, f* rate %.5f", base, std::exp(slope));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"f* for n = 7..36", fstar_small},
      {"f* spot values up to n = 1000", fstar_large},
      {"insphere bound at n = 24", insphere24},
      {"insphere table n = 24..36", insphere_table},
      {"120-cell and 600-cell", four_polytopes},
      {"derivative structure at 0", derivatives},
      {"outer-angle closed forms", outer_angles},
      {"gauge moments", moments},
      {"rho* drift", rho_drift},
      {"asymptotic spherical-code gauge", heuristic_gauge},
      {"Levenshtein gauge vs f* at n = 50", levenshtein_vs_fstar},
      {"rate constants", constants},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.outcome = Outcome::Fail;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = c.outcome == Outcome::Pass ? "PASS" : c.outcome == Outcome::Fail ? "FAIL" : "SKIP";
    failures += c.outcome == Outcome::Fail;
    std::printf("%s %2zu %s: %s (%.1fs)\n", tag, i + 1, criteria[i].first.c_str(),
                c.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

#include "crosspack/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "crosspack/ball_table.hpp"
#include "crosspack/cross_polytope.hpp"
#include "crosspack/errors.hpp"
#include "crosspack/gamma_cache.hpp"
#include "crosspack/report_io.hpp"
#include "crosspack/svg_plot.hpp"

namespace crosspack {

namespace {

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::logic_error&) {
    throw DomainError("invalid integer '" + s + "'");
  }
  if (used != s.size()) throw DomainError("invalid integer '" + s + "'");
  return v;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    throw DomainError("invalid number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("invalid number '" + s + "'");
  return v;
}

double degrees(double deg) { return deg * std::numbers::pi / 180.0; }

// Maps a failure to the documented exit code and prints one diagnostic line.
int report_failure(std::ostream& err, const std::exception_ptr& failure) {
  try {
    std::rethrow_exception(failure);
  } catch (const FormatError& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << '\n';
    return kExitInputError;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitQuadratureError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

BoundReport compute_one(int n, const RunConfig& config, const BallTable* balls,
                        GammaCache* cache) {
  if (config.method == BoundMethod::InsphereRatio) {
    std::optional<BallDensityRecord> rec;
    if (balls) rec = balls->best_for(n);
    if (!rec && n == 24) rec = leech_lattice_density();
    if (!rec) throw DomainError("no ball density available for n=" + std::to_string(n));
    return insphere_bound(log_volume_xn(n), inradius_xn(n), n,
                          LogNonNeg::from_real(rec->delta_upper), rec->rigor, rec->source);
  }
  const IntrinsicVolumes iv = intrinsic_volumes(n, config.quadrature, cache);
  const int k_max = config.k_max > 0 ? config.k_max : default_kl_degree_limit(n);
  std::vector<double> grid = config.phi_grid;
  if (grid.empty()) grid = default_angle_grid(config.gauge, config.kl_window);
  switch (config.gauge) {
    case GaugeKind::F0:
      return blichfeldt_bound(n, iv, moments_f0(n), config.blichfeldt);
    case GaugeKind::FStar:
      return blichfeldt_bound(n, iv, moments_fstar(n), config.blichfeldt);
    case GaugeKind::LevenshteinPrecise:
      return optimize_levenshtein_bound(n, iv, grid, k_max, config.blichfeldt);
    case GaugeKind::KLAsymptotic:
      return kl_asymptotic_sweep({n}, [&](int) { return iv; }, grid, config.kl_window,
                                 config.blichfeldt)
          .front();
  }
  throw DomainError("unknown gauge");
}

}  // namespace

std::vector<int> parse_dimension_list(const std::string& text) {
  std::vector<int> dims;
  std::istringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) {
    if (part.empty()) throw DomainError("empty dimension entry");
    const auto dots = part.find("..");
    int lo = 0, hi = 0;
    if (dots == std::string::npos) {
      lo = hi = parse_int(part);
    } else {
      lo = parse_int(part.substr(0, dots));
      hi = parse_int(part.substr(dots + 2));
    }
    if (lo < 1 || hi < 1) throw DomainError("dimension must be ≥ 1");
    if (hi < lo) throw DomainError("empty dimension range '" + part + "'");
    for (int n = lo; n <= hi; ++n) dims.push_back(n);
  }
  if (dims.empty()) throw DomainError("no dimensions given");
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  return dims;
}

std::vector<double> parse_angle_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    std::istringstream s(text);
    std::string lo, hi, count;
    std::getline(s, lo, ':');
    std::getline(s, hi, ':');
    std::getline(s, count);
    return angle_grid(degrees(parse_real(lo)), degrees(parse_real(hi)), parse_int(count));
  }
  std::vector<double> grid;
  std::istringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) grid.push_back(degrees(parse_real(part)));
  if (grid.empty()) throw DomainError("empty angle grid");
  return grid;
}

std::vector<double> default_angle_grid(GaugeKind gauge, KlWindow window) {
  if (gauge == GaugeKind::KLAsymptotic) {
    return angle_grid(std::numbers::pi / 3.0, kl_asymptotic_phi_max(window), 32);
  }
  return angle_grid(std::numbers::pi / 3.0, std::numbers::pi, 64);
}

std::optional<std::filesystem::path> resolve_cache_path(
    const std::optional<std::filesystem::path>& explicit_path) {
  if (explicit_path) return explicit_path;
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) {
    return std::filesystem::path(dir) / kCacheFileName;
  }
  return std::nullopt;
}

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.dimensions.empty()) {
    err << "error: no dimensions given\n";
    return kExitInputError;
  }
  for (int n : config.dimensions) {
    if (n < 1) {
      err << "error: dimension must be ≥ 1\n";
      return kExitInputError;
    }
  }
  if (config.format != "csv" && config.format != "json" && config.format != "svg") {
    err << "error: unknown format '" << config.format << "'\n";
    return kExitInputError;
  }

  std::optional<BallTable> balls;
  if (config.method == BoundMethod::InsphereRatio) {
    if (config.ball_table_path) {
      try {
        balls = BallTable::load(*config.ball_table_path);
      } catch (...) {
        return report_failure(err, std::current_exception());
      }
    } else if (config.dimensions != std::vector<int>{24}) {
      err << "error: insphere method needs --ball-table unless n = 24\n";
      return kExitInputError;
    }
  }

  GammaCache cache;
  const auto cache_path = resolve_cache_path(config.cache_path);
  if (cache_path) {
    try {
      cache.load(*cache_path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
  }

  std::vector<int> dims = config.dimensions;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  std::vector<std::optional<BoundReport>> results(dims.size());
  std::vector<std::exception_ptr> failures(dims.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dims.size(); i = next++) {
      try {
        results[i] = compute_one(dims[i], config, balls ? &*balls : nullptr,
                                 cache_path ? &cache : nullptr);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(dims.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  if (cache_path && cache.dirty()) {
    try {
      cache.save(*cache_path);
    } catch (const std::exception& e) {
      err << "warning: " << e.what() << '\n';
    }
  }
  for (const auto& f : failures) {
    if (f) return report_failure(err, f);
  }

  std::vector<BoundReport> reports;
  reports.reserve(results.size());
  for (auto& r : results) reports.push_back(std::move(*r));

  if (config.format == "csv") {
    write_reports_csv(out, reports);
  } else if (config.format == "json") {
    out << reports_to_json(reports) << '\n';
  } else {
    std::string label = method_name(config.method);
    if (config.method == BoundMethod::Blichfeldt) label += " " + gauge_kind_name(config.gauge);
    out << render_svg({series_from_reports(label, reports)}, PlotStyle{config.log_scale});
  }
  return kExitOk;
}

int cmd_ingest_ball_table(const std::filesystem::path& path, std::ostream& out,
                          std::ostream& err) {
  try {
    const BallTable table = BallTable::load(path);
    out << table.size() << '\n';
    return kExitOk;
  } catch (...) {
    return report_failure(err, std::current_exception());
  }
}

int cmd_plot(const std::vector<std::filesystem::path>& inputs,
             const std::vector<std::string>& labels, bool log_scale, std::ostream& out,
             std::ostream& err) {
  if (inputs.empty()) {
    err << "error: plot needs at least one report series\n";
    return kExitInputError;
  }
  try {
    std::vector<PlotSeries> series;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::ifstream in(inputs[i]);
      if (!in) throw FormatError("cannot read " + inputs[i].string(), 0);
      const auto reports = read_reports_csv(in);
      const std::string label = i < labels.size() ? labels[i] : inputs[i].stem().string();
      series.push_back(series_from_reports(label, reports));
    }
    out << render_svg(series, PlotStyle{log_scale});
    return kExitOk;
  } catch (...) {
    return report_failure(err, std::current_exception());
  }
}

int cmd_cache(const std::string& action, const std::optional<std::filesystem::path>& path,
              std::ostream& out, std::ostream& err) {
  const auto resolved = resolve_cache_path(path);
  if (!resolved) {
    err << "error: no cache path (use --cache or set " << kCacheDirEnv << ")\n";
    return kExitInputError;
  }
  try {
    if (action == "inspect") {
      GammaCache cache;
      cache.load(*resolved);
      out << "path: " << resolved->string() << '\n';
      out << "entries: " << cache.size() << '\n';
      for (const auto& [fp, count] : cache.summary()) out << fp << ": " << count << '\n';
      return kExitOk;
    }
    if (action == "clear") {
      std::filesystem::remove(*resolved);
      out << "cleared " << resolved->string() << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "error: unknown cache action '" << action << "'\n";
  return kExitInputError;
}

}  // namespace crosspack

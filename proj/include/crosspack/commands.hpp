#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crosspack/bounds.hpp"
#include "crosspack/gauges.hpp"
#include "crosspack/quadrature.hpp"

namespace crosspack {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitQuadratureError = 3,
  kExitInfeasible = 4,
};

// Environment variable naming the default gamma cache directory.
inline constexpr const char* kCacheDirEnv = "CROSSPACK_CACHE_DIR";
inline constexpr const char* kCacheFileName = "gamma_cache.csv";

struct RunConfig {
  std::vector<int> dimensions;
  BoundMethod method = BoundMethod::Blichfeldt;
  GaugeKind gauge = GaugeKind::FStar;
  std::vector<double> phi_grid;  // radians; empty selects the gauge default
  KlWindow kl_window = KlWindow::Strict;
  int k_max = 0;  // 0 selects 4n + 200
  QuadratureSpec quadrature;
  BlichfeldtOptions blichfeldt;
  std::string format = "csv";  // csv | json | svg
  bool log_scale = false;      // svg only
  std::optional<std::filesystem::path> cache_path;
  std::optional<std::filesystem::path> ball_table_path;
  int threads = 0;  // 0 = hardware concurrency
};

/// "7..36", "24", "40,50,100..102". Throws DomainError on bad syntax or on
/// dimensions below 1. Result is sorted and unique.
std::vector<int> parse_dimension_list(const std::string& text);

/// "lo:hi:count" in degrees, or a comma list of degrees; returns radians.
std::vector<double> parse_angle_grid(const std::string& text);

/// Default angle grid for spherical-code gauges.
std::vector<double> default_angle_grid(GaugeKind gauge, KlWindow window);

/// Cache file from an explicit path or the environment, if any.
std::optional<std::filesystem::path> resolve_cache_path(
    const std::optional<std::filesystem::path>& explicit_path);

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ingest_ball_table(const std::filesystem::path& path, std::ostream& out,
                          std::ostream& err);
int cmd_plot(const std::vector<std::filesystem::path>& inputs,
             const std::vector<std::string>& labels, bool log_scale, std::ostream& out,
             std::ostream& err);
int cmd_cache(const std::string& action, const std::optional<std::filesystem::path>& path,
              std::ostream& out, std::ostream& err);

}  // namespace crosspack

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace crosspack {

/// Persistent store of ln gamma(n, j) keyed by (n, j, quadrature fingerprint).
///
/// File format, one entry per line: `n,j,log_gamma,fingerprint` with the
/// log value printed to 17 significant digits, so a reload is bit-exact.
/// Reads may run concurrently; inserts and file writes are serialized.
class GammaCache {
 public:
  GammaCache() = default;
  GammaCache(const GammaCache&) = delete;
  GammaCache& operator=(const GammaCache&) = delete;

  std::optional<double> find(int n, int j, const std::string& fingerprint) const;
  void insert(int n, int j, const std::string& fingerprint, double log_gamma);

  std::size_t size() const;
  void clear();
  // True when entries were inserted since the last load/save.
  bool dirty() const;

  /// Merges entries from a file; a missing file is not an error.
  /// Throws std::runtime_error naming the line on malformed input.
  void load(const std::filesystem::path& path);
  /// Writes to a sibling temporary and renames it over the target.
  void save(const std::filesystem::path& path) const;

  /// Entry count per fingerprint, for `cache inspect`.
  std::map<std::string, std::size_t> summary() const;

 private:
  using Key = std::tuple<int, int, std::string>;
  mutable std::shared_mutex mutex_;
  std::map<Key, double> entries_;
  mutable bool dirty_ = false;
};

}  // namespace crosspack

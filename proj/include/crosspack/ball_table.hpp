#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crosspack/bounds.hpp"
#include "crosspack/report_io.hpp"

namespace crosspack {

/// An upper bound on the packing density of B^n from some source.
struct BallDensityRecord {
  int n = 0;
  double delta_upper = 0;
  std::string source;
  Rigor rigor = Rigor::Rigorous;
};

/// delta(B^24) = pi^12 / 12!, the Leech lattice density.
BallDensityRecord leech_lattice_density();

/// Records parsed from `n,delta_upper,source,rigor` lines. Blank lines and
/// lines starting with '#' are skipped, as is a leading header line.
class BallTable {
 public:
  /// Throws FormatError (with 1-based line number) on malformed lines,
  /// out-of-range densities and duplicate (n, source) pairs.
  static BallTable parse(std::istream& in);
  /// As parse; an unreadable file raises FormatError with line 0.
  static BallTable load(const std::filesystem::path& path);

  void add(BallDensityRecord record);  // throws std::invalid_argument on duplicates

  std::size_t size() const { return records_.size(); }
  const std::vector<BallDensityRecord>& records() const { return records_; }

  /// Smallest delta_upper recorded for n.
  std::optional<BallDensityRecord> best_for(int n) const;

 private:
  std::vector<BallDensityRecord> records_;
};

}  // namespace crosspack

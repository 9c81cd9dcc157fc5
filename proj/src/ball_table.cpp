#include "crosspack/ball_table.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "crosspack/special.hpp"

namespace crosspack {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

BallDensityRecord leech_lattice_density() {
  const double log_delta = 12.0 * std::log(std::numbers::pi) - log_gamma_fn(13.0);
  return {24, std::exp(log_delta), "leech-lattice", Rigor::Rigorous};
}

void BallTable::add(BallDensityRecord record) {
  for (const auto& r : records_) {
    if (r.n == record.n && r.source == record.source) {
      throw std::invalid_argument("duplicate record for n=" + std::to_string(record.n) +
                                  " source=" + record.source);
    }
  }
  records_.push_back(std::move(record));
}

BallTable BallTable::parse(std::istream& in) {
  BallTable table;
  std::string raw;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (first_content && line == "n,delta_upper,source,rigor") {
      first_content = false;
      continue;
    }
    first_content = false;

    std::vector<std::string> f;
    std::istringstream s(line);
    std::string field;
    while (std::getline(s, field, ',')) f.push_back(trim(field));
    if (f.size() != 4) throw FormatError("expected 4 fields", line_no);

    BallDensityRecord rec;
    try {
      std::size_t used = 0;
      rec.n = std::stoi(f[0], &used);
      if (used != f[0].size()) throw std::invalid_argument(f[0]);
      rec.delta_upper = std::stod(f[1], &used);
      if (used != f[1].size()) throw std::invalid_argument(f[1]);
    } catch (const std::logic_error&) {
      throw FormatError("invalid number", line_no);
    }
    if (rec.n < 1) throw FormatError("dimension must be >= 1", line_no);
    if (!(rec.delta_upper > 0.0 && rec.delta_upper <= 1.0)) {
      throw FormatError("delta_upper must lie in (0, 1]", line_no);
    }
    rec.source = f[2];
    if (rec.source.empty()) throw FormatError("empty source", line_no);
    if (f[3] == "rigorous") {
      rec.rigor = Rigor::Rigorous;
    } else if (f[3] == "heuristic") {
      rec.rigor = Rigor::Heuristic;
    } else {
      throw FormatError("rigor must be 'rigorous' or 'heuristic'", line_no);
    }
    try {
      table.add(std::move(rec));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what(), line_no);
    }
  }
  return table;
}

BallTable BallTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read ball table " + path.string(), 0);
  return parse(in);
}

std::optional<BallDensityRecord> BallTable::best_for(int n) const {
  std::optional<BallDensityRecord> best;
  for (const auto& r : records_) {
    if (r.n == n && (!best || r.delta_upper < best->delta_upper)) best = r;
  }
  return best;
}

}  // namespace crosspack

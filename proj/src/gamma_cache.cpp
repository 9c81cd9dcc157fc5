#include "crosspack/gamma_cache.hpp"

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace crosspack {

std::optional<double> GammaCache::find(int n, int j,
                                       const std::string& fingerprint) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(Key{n, j, fingerprint});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void GammaCache::insert(int n, int j, const std::string& fingerprint,
                        double log_gamma) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(Key{n, j, fingerprint}, log_gamma);
  if (!inserted) it->second = log_gamma;
  dirty_ = true;
}

std::size_t GammaCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void GammaCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  dirty_ = true;
}

bool GammaCache::dirty() const {
  std::shared_lock lock(mutex_);
  return dirty_;
}

void GammaCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::vector<std::pair<Key, double>> parsed;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string n_s, j_s, v_s, fp;
    if (!std::getline(fields, n_s, ',') || !std::getline(fields, j_s, ',') ||
        !std::getline(fields, v_s, ',') || !std::getline(fields, fp) || fp.empty()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": malformed gamma cache line");
    }
    try {
      std::size_t used = 0;
      const int n = std::stoi(n_s);
      const int j = std::stoi(j_s);
      const double v = std::stod(v_s, &used);
      if (used != v_s.size()) throw std::invalid_argument(v_s);
      parsed.emplace_back(Key{n, j, fp}, v);
    } catch (const std::logic_error&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": malformed gamma cache line");
    }
  }
  std::unique_lock lock(mutex_);
  for (auto& [k, v] : parsed) entries_[k] = v;
}

void GammaCache::save(const std::filesystem::path& path) const {
  std::unique_lock lock(mutex_);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write gamma cache " + tmp.string());
    char buf[64];
    for (const auto& [key, v] : entries_) {
      const auto& [n, j, fp] = key;
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << n << ',' << j << ',' << buf << ',' << fp << '\n';
    }
    if (!out) throw std::runtime_error("cannot write gamma cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  dirty_ = false;
}

std::map<std::string, std::size_t> GammaCache::summary() const {
  std::shared_lock lock(mutex_);
  std::map<std::string, std::size_t> out;
  for (const auto& [key, v] : entries_) ++out[std::get<2>(key)];
  return out;
}

}  // namespace crosspack

#include "gwilf/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace gwilf::cli {

namespace {

std::string cache_file_name(int k, const std::string& mode, std::optional<unsigned> r) {
  std::ostringstream name;
  name << "k" << k << "_" << mode;
  if (r) name << "_r" << *r;
  name << ".json";
  return name.str();
}

}  // namespace

std::filesystem::path CacheFile::directory() {
  if (const char* env = std::getenv("GWILF_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".gwilf-cache");
}

CacheFile::CacheFile(int k, const std::string& mode, std::optional<unsigned> r)
    : k_(k), mode_(mode), r_(r), path_(directory() / cache_file_name(k, mode, r)) {
  load();
}

void CacheFile::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // no cache yet
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    std::cerr << "warning: ignoring unreadable cache file " << path_.string() << "\n";
    return;
  }
  if (!doc.is_object() || doc.value("format_version", -1) != kFormatVersion ||
      doc.value("k", -1) != k_ || doc.value("mode", std::string()) != mode_ ||
      (r_ ? (!doc.contains("r") || doc["r"] != *r_) : doc.contains("r"))) {
    std::cerr << "warning: ignoring cache file " << path_.string()
              << " (header does not match this request)\n";
    return;
  }
  if (!doc.contains("entries") || !doc["entries"].is_object()) return;
  for (const auto& [key, value] : doc["entries"].items()) {
    char* end = nullptr;
    const long n = std::strtol(key.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || n < 1) {
      std::cerr << "warning: ignoring corrupt cache entry \"" << key << "\" in "
                << path_.string() << "\n";
      continue;
    }
    entries_[n] = value.dump();
  }
}

std::optional<std::string> CacheFile::lookup(long n) const {
  if (const auto it = entries_.find(n); it != entries_.end()) return it->second;
  return std::nullopt;
}

void CacheFile::store(long n, const std::string& payload) {
  entries_[n] = payload;
  save();
}

void CacheFile::save() const {
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["k"] = k_;
  doc["mode"] = mode_;
  if (r_) doc["r"] = *r_;
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [n, payload] : entries_)
    entries[std::to_string(n)] = nlohmann::json::parse(payload);
  doc["entries"] = std::move(entries);

  std::error_code ec;
  std::filesystem::create_directories(path_.parent_path(), ec);
  const std::filesystem::path tmp = path_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      std::cerr << "warning: cannot write cache file " << tmp.string() << "\n";
      return;
    }
    out << doc.dump();
  }
  std::filesystem::rename(tmp, path_, ec);
  if (ec)
    std::cerr << "warning: cannot update cache file " << path_.string() << ": "
              << ec.message() << "\n";
}

}  // namespace gwilf::cli

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace gwilf::cli {

// On-disk result cache: one versioned JSON file per (k, mode, r) tuple,
// entries keyed by n. The header must match the request exactly for reuse;
// files or entries that fail validation are ignored with a warning and
// replaced on the next store. Opt-in via --cache; directory from
// GWILF_CACHE_DIR (default ./.gwilf-cache).
class CacheFile {
 public:
  static constexpr int kFormatVersion = 1;

  CacheFile(int k, const std::string& mode, std::optional<unsigned> r);

  static std::filesystem::path directory();

  // Payload is a mode-specific JSON fragment (polynomial pair array for
  // exact/brute, coefficient string array for truncated).
  std::optional<std::string> lookup(long n) const;
  void store(long n, const std::string& payload);

  const std::filesystem::path& path() const { return path_; }

 private:
  int k_;
  std::string mode_;
  std::optional<unsigned> r_;
  std::filesystem::path path_;
  std::map<long, std::string> entries_;

  void load();
  void save() const;
};

}  // namespace gwilf::cli

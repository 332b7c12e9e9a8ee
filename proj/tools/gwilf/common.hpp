#pragma once

#include <cstdint>
#include <string>

#include "gwilf/engine.hpp"

namespace gwilf::cli {

// Options shared by every subcommand.
struct CommonOptions {
  int k = 0;            // 0 = unset
  std::string pattern;  // e.g. "123"; alias for --k
  std::string n_spec;   // "5" or "1..8"
  std::string format = "text";
  std::string out_path;  // empty = stdout
  int threads = 1;
  std::uint64_t max_states = 0;
  double max_seconds = 0.0;
  bool force = false;   // lift feasibility guards (budgets still apply)
  bool use_cache = false;
};

struct Range {
  long lo = 0;
  long hi = 0;
};

// "5" -> [5,5]; "1..8" -> [1,8]. DomainError on malformed input.
Range parse_range(const std::string& spec, const char* flag_name);

// Resolves --k / --pattern into a pattern length, enforcing k >= 3 and that
// only increasing patterns "12...k" are accepted.
int resolve_k(const CommonOptions& opts);

Engine make_engine(const CommonOptions& opts);

// Exhaustive-enumeration guard for brute-force runs.
int brute_guard(const CommonOptions& opts, long n);

// Writes the rendered output to --out or stdout.
void emit(const CommonOptions& opts, const std::string& body);

}  // namespace gwilf::cli

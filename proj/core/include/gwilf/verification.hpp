#pragma once

#include <string>
#include <vector>

#include "gwilf/bigint.hpp"

namespace gwilf {

// One closed-form-vs-engine comparison cell.
struct VerificationCell {
  int r = 0;
  long n = 0;
  BigInt formula_value;
  BigInt engine_value;
  bool match = false;
  std::string note;  // e.g. "non-integer formula value"
};

// A requested cell that could not be evaluated (below the formula's domain).
struct VerificationSkip {
  int r = 0;
  long n = 0;
  std::string reason;
};

struct VerificationReport {
  std::vector<VerificationCell> cells;
  std::vector<VerificationSkip> skipped;

  bool all_match() const {
    for (const auto& cell : cells)
      if (!cell.match) return false;
    return true;
  }
  std::size_t mismatch_count() const {
    std::size_t n = 0;
    for (const auto& cell : cells)
      if (!cell.match) ++n;
    return n;
  }
};

}  // namespace gwilf

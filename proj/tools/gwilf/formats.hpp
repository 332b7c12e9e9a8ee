#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwilf/analysis.hpp"
#include "gwilf/bigint.hpp"
#include "gwilf/qpoly.hpp"
#include "gwilf/verification.hpp"

namespace gwilf::cli {

std::string render_poly_text(const QPoly& poly);
std::string render_poly_json(const QPoly& poly, int k, long n, const std::string& mode);

struct CountRow {
  long n = 0;
  BigInt value;
};

std::string render_counts_text(const std::vector<CountRow>& rows);
// OEIS-style b-file: one "n a(n)" pair per line, ascending n.
std::string render_counts_bfile(const std::vector<CountRow>& rows);
std::string render_counts_json(const std::vector<CountRow>& rows, int k, unsigned r);

std::string render_verify_text(const VerificationReport& report);
std::string render_verify_json(const VerificationReport& report, int k);

struct OracleRow {
  long n = 0;
  bool match = false;
  std::string engine_text;
  std::string brute_text;
};

std::string render_oracle_text(const std::vector<OracleRow>& rows);
std::string render_oracle_json(const std::vector<OracleRow>& rows, int k);

std::string render_moments_text(const std::vector<MomentReport>& reports);
std::string render_moments_json(const std::vector<MomentReport>& reports, int order);

}  // namespace gwilf::cli

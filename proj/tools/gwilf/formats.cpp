#include "gwilf/formats.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gwilf/serialize.hpp"

namespace gwilf::cli {

namespace {

std::string standardized_to_text(double value) {
  if (std::isnan(value)) return "undefined";
  std::ostringstream out;
  out << std::setprecision(6) << value;
  return out.str();
}

nlohmann::json moment_report_json(const MomentReport& report) {
  nlohmann::json j;
  j["k"] = report.k;
  j["n"] = report.n;
  j["mean"] = rational_to_text(report.mean);
  nlohmann::json centered = nlohmann::json::array();
  nlohmann::json standardized = nlohmann::json::array();
  for (std::size_t i = 0; i < report.centered.size(); ++i) {
    const std::string order = std::to_string(i + 2);
    centered.push_back({order, rational_to_text(report.centered[i])});
    standardized.push_back({order, standardized_to_text(report.standardized[i])});
  }
  j["centered"] = std::move(centered);
  j["standardized"] = std::move(standardized);
  return j;
}

}  // namespace

std::string render_poly_text(const QPoly& poly) { return poly.to_text() + "\n"; }

std::string render_poly_json(const QPoly& poly, int k, long n, const std::string& mode) {
  nlohmann::json j;
  j["k"] = k;
  j["n"] = n;
  j["mode"] = mode;
  if (poly.cap()) j["r"] = *poly.cap();
  j["poly"] = nlohmann::json::parse(qpoly_to_json(poly));
  return j.dump() + "\n";
}

std::string render_counts_text(const std::vector<CountRow>& rows) {
  std::string out;
  for (const auto& row : rows) out += row.value.str() + "\n";
  return out;
}

std::string render_counts_bfile(const std::vector<CountRow>& rows) {
  std::string out;
  for (const auto& row : rows)
    out += std::to_string(row.n) + " " + row.value.str() + "\n";
  return out;
}

std::string render_counts_json(const std::vector<CountRow>& rows, int k, unsigned r) {
  nlohmann::json j;
  j["k"] = k;
  j["mode"] = "truncated";
  j["r"] = r;
  nlohmann::json values = nlohmann::json::array();
  for (const auto& row : rows) values.push_back({std::to_string(row.n), row.value.str()});
  j["counts"] = std::move(values);
  return j.dump() + "\n";
}

std::string render_verify_text(const VerificationReport& report) {
  std::string out;
  for (const auto& cell : report.cells) {
    out += "r=" + std::to_string(cell.r) + " n=" + std::to_string(cell.n) +
           " formula=" + cell.formula_value.str() + " engine=" + cell.engine_value.str() +
           (cell.match ? " match" : " MISMATCH");
    if (!cell.note.empty()) out += " (" + cell.note + ")";
    out += "\n";
  }
  for (const auto& skip : report.skipped)
    out += "r=" + std::to_string(skip.r) + " n=" + std::to_string(skip.n) +
           " skipped (" + skip.reason + ")\n";
  out += report.all_match()
             ? "all " + std::to_string(report.cells.size()) + " cells match\n"
             : std::to_string(report.mismatch_count()) + " of " +
                   std::to_string(report.cells.size()) + " cells mismatch\n";
  return out;
}

std::string render_verify_json(const VerificationReport& report, int k) {
  nlohmann::json j;
  j["k"] = k;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& cell : report.cells) {
    nlohmann::json c;
    c["r"] = cell.r;
    c["n"] = cell.n;
    c["formula"] = cell.formula_value.str();
    c["engine"] = cell.engine_value.str();
    c["match"] = cell.match;
    if (!cell.note.empty()) c["note"] = cell.note;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& skip : report.skipped)
    skipped.push_back({{"r", skip.r}, {"n", skip.n}, {"reason", skip.reason}});
  j["skipped"] = std::move(skipped);
  j["all_match"] = report.all_match();
  return j.dump() + "\n";
}

std::string render_oracle_text(const std::vector<OracleRow>& rows) {
  std::string out;
  bool all_match = true;
  for (const auto& row : rows) {
    out += "n=" + std::to_string(row.n) + (row.match ? " match" : " MISMATCH") + "\n";
    if (!row.match) {
      out += "  engine: " + row.engine_text + "\n";
      out += "  brute:  " + row.brute_text + "\n";
      all_match = false;
    }
  }
  out += all_match ? "engine and brute force agree on all rows\n"
                   : "engine and brute force disagree\n";
  return out;
}

std::string render_oracle_json(const std::vector<OracleRow>& rows, int k) {
  nlohmann::json j;
  j["k"] = k;
  nlohmann::json rows_json = nlohmann::json::array();
  bool all_match = true;
  for (const auto& row : rows) {
    nlohmann::json r;
    r["n"] = row.n;
    r["match"] = row.match;
    if (!row.match) {
      r["engine"] = row.engine_text;
      r["brute"] = row.brute_text;
      all_match = false;
    }
    rows_json.push_back(std::move(r));
  }
  j["rows"] = std::move(rows_json);
  j["all_match"] = all_match;
  return j.dump() + "\n";
}

std::string render_moments_text(const std::vector<MomentReport>& reports) {
  std::string out;
  bool first = true;
  for (const auto& report : reports) {
    if (!first) out += "\n";
    first = false;
    out += "k=" + std::to_string(report.k) + " n=" + std::to_string(report.n) + "\n";
    out += "mean = " + rational_to_text(report.mean) + "\n";
    for (std::size_t i = 0; i < report.centered.size(); ++i) {
      const std::string order = std::to_string(i + 2);
      out += "centered[" + order + "] = " + rational_to_text(report.centered[i]) + "\n";
      out += "standardized[" + order + "] = " +
             standardized_to_text(report.standardized[i]) + "\n";
    }
  }
  return out;
}

std::string render_moments_json(const std::vector<MomentReport>& reports, int order) {
  nlohmann::json j;
  j["order"] = order;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& report : reports) arr.push_back(moment_report_json(report));
  j["reports"] = std::move(arr);
  return j.dump() + "\n";
}

}  // namespace gwilf::cli

#include "gwilf/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gwilf/errors.hpp"

namespace gwilf {

namespace {

void require_full_distribution(const QPoly& p, const char* who) {
  if (p.cap())
    throw DomainError(std::string(who) + ": input is capped; moments of a chopped "
                                         "distribution are meaningless");
  if (p.eval_at_one() <= 0)
    throw DomainError(std::string(who) + ": total mass must be positive");
}

Rational rational_pow(const Rational& base, int e) {
  Rational acc = 1;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

Rational mean(const QPoly& p) {
  require_full_distribution(p, "mean");
  BigInt weighted = 0;
  const auto& cs = p.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) weighted += BigInt(j) * cs[j];
  return Rational(weighted, p.eval_at_one());
}

Rational centered_moment(const QPoly& p, int order) {
  require_full_distribution(p, "centered_moment");
  if (order < 1) throw DomainError("centered_moment: order must be at least 1");
  const Rational mu = mean(p);
  Rational acc = 0;
  const auto& cs = p.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] == 0) continue;
    acc += Rational(cs[j]) * rational_pow(Rational(j) - mu, order);
  }
  return acc / Rational(p.eval_at_one());
}

Rational standardized_moment_exact(const QPoly& p, int even_order) {
  if (even_order < 2 || even_order % 2 != 0)
    throw DomainError("standardized_moment_exact: order must be even and >= 2");
  const Rational variance = centered_moment(p, 2);
  if (variance == 0)
    throw DomainError("standardized_moment_exact: zero variance");
  return centered_moment(p, even_order) / rational_pow(variance, even_order / 2);
}

double standardized_moment(const QPoly& p, int order) {
  if (order < 2) throw DomainError("standardized_moment: order must be at least 2");
  const Rational variance = centered_moment(p, 2);
  if (variance == 0) throw DomainError("standardized_moment: zero variance");
  const Rational mj = centered_moment(p, order);
  if (order % 2 == 0)
    return (mj / rational_pow(variance, order / 2)).convert_to<double>();
  // m_j / sigma^j with odd j: carry the sign, take the square root once.
  const Rational squared = (mj * mj) / rational_pow(variance, order);
  const double magnitude = std::sqrt(squared.convert_to<double>());
  return mj < 0 ? -magnitude : magnitude;
}

MomentReport moment_report(const QPoly& p, int k, long n, int max_order) {
  if (max_order < 1) throw DomainError("moment_report: max_order must be at least 1");
  MomentReport report;
  report.k = k;
  report.n = n;
  report.max_order = max_order;
  report.mean = mean(p);
  const Rational variance = max_order >= 2 ? centered_moment(p, 2) : Rational(0);
  for (int order = 2; order <= max_order; ++order) {
    report.centered.push_back(centered_moment(p, order));
    // Standardization needs positive variance; degenerate (point-mass)
    // distributions get NaN, rendered as "undefined" downstream.
    report.standardized.push_back(variance == 0
                                      ? std::numeric_limits<double>::quiet_NaN()
                                      : standardized_moment(p, order));
  }
  return report;
}

std::vector<MomentReport> normality_report(int k, long n_lo, long n_hi, int max_order,
                                           Engine& engine) {
  std::vector<MomentReport> reports;
  for (long n = n_lo; n <= n_hi; ++n) {
    const QPoly p = engine.distribution(k, static_cast<int>(n));
    reports.push_back(moment_report(p, k, n, max_order));
  }
  return reports;
}

}  // namespace gwilf

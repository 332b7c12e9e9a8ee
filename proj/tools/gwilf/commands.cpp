#include "gwilf/commands.hpp"

#include <iostream>
#include <optional>
#include <vector>

#include <json.hpp>

#include "gwilf/cache.hpp"
#include "gwilf/errors.hpp"
#include "gwilf/formats.hpp"
#include "gwilf/formulas.hpp"
#include "gwilf/oracle.hpp"
#include "gwilf/serialize.hpp"

namespace gwilf::cli {

namespace {

std::optional<QPoly> cached_poly(const CacheFile& cache, long n,
                                 std::optional<unsigned> cap) {
  const auto payload = cache.lookup(n);
  if (!payload) return std::nullopt;
  try {
    return qpoly_from_json(*payload, cap);
  } catch (const DomainError&) {
    std::cerr << "warning: ignoring corrupt cache entry n=" << n << " in "
              << cache.path().string() << "\n";
    return std::nullopt;
  }
}

std::optional<std::vector<BigInt>> cached_counts(const CacheFile& cache, long n,
                                                 unsigned r) {
  const auto payload = cache.lookup(n);
  if (!payload) return std::nullopt;
  try {
    const nlohmann::json arr = nlohmann::json::parse(*payload);
    if (!arr.is_array() || arr.size() != r + 1)
      throw DomainError("wrong entry shape");
    std::vector<BigInt> counts;
    for (const auto& item : arr) {
      if (!item.is_string()) throw DomainError("wrong entry shape");
      counts.push_back(parse_decimal(item.get<std::string>()));
    }
    return counts;
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring corrupt cache entry n=" << n << " in "
              << cache.path().string() << "\n";
    return std::nullopt;
  }
}

std::string counts_payload(const std::vector<BigInt>& counts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& value : counts) arr.push_back(value.str());
  return arr.dump();
}

// Exact or brute distribution for one n, consulting the cache when enabled.
QPoly obtain_distribution(const CommonOptions& opts, int k, long n,
                          const std::string& mode, Engine& engine) {
  std::optional<CacheFile> cache;
  if (opts.use_cache) {
    cache.emplace(k, mode, std::nullopt);
    if (const auto hit = cached_poly(*cache, n, std::nullopt)) return *hit;
  }
  QPoly poly;
  if (mode == "exact") {
    poly = engine.distribution(k, static_cast<int>(n));
  } else {
    poly = distribution_brute(Permutation::identity(k), static_cast<int>(n),
                              brute_guard(opts, n));
  }
  if (cache) cache->store(n, qpoly_to_json(poly));
  return poly;
}

}  // namespace

int cmd_dist(const CommonOptions& opts, const std::string& mode) {
  const int k = resolve_k(opts);
  const Range n_range = parse_range(opts.n_spec, "--n");
  if (n_range.lo != n_range.hi)
    throw DomainError("--n: dist expects a single value, not a range");
  const long n = n_range.lo;
  if (n < 1) throw DomainError("--n must be at least 1");

  Engine engine = make_engine(opts);
  const QPoly poly = obtain_distribution(opts, k, n, mode, engine);
  emit(opts, opts.format == "json" ? render_poly_json(poly, k, n, mode)
                                   : render_poly_text(poly));
  return 0;
}

int cmd_counts(const CommonOptions& opts, unsigned r) {
  const int k = resolve_k(opts);
  const Range n_range = parse_range(opts.n_spec, "--n");
  if (n_range.lo < 1) throw DomainError("--n must be at least 1");

  Engine engine = make_engine(opts);
  std::optional<CacheFile> cache;
  if (opts.use_cache) cache.emplace(k, "truncated", r);

  std::vector<CountRow> rows;
  for (long n = n_range.lo; n <= n_range.hi; ++n) {
    std::vector<BigInt> counts;
    if (cache) {
      if (auto hit = cached_counts(*cache, n, r)) counts = std::move(*hit);
    }
    if (counts.empty()) {
      counts = engine.truncated_counts(k, r, static_cast<int>(n));
      if (cache) cache->store(n, counts_payload(counts));
    }
    rows.push_back(CountRow{n, counts.back()});
  }

  std::string body;
  if (opts.format == "bfile")
    body = render_counts_bfile(rows);
  else if (opts.format == "json")
    body = render_counts_json(rows, k, r);
  else
    body = render_counts_text(rows);
  emit(opts, body);
  return 0;
}

int cmd_verify(const CommonOptions& opts, const std::string& r_spec) {
  if (opts.k != 0 && opts.k != 3)
    throw DomainError("verify: closed forms exist for --k 3 only");
  if (!opts.pattern.empty() && opts.pattern != "123")
    throw DomainError("verify: closed forms exist for the pattern 123 only");
  const Range r_range = parse_range(r_spec, "--r");
  const Range n_range = parse_range(opts.n_spec, "--n");
  if (r_range.lo < 0 || r_range.hi > 7)
    throw DomainError("--r: closed forms cover r in 0..7");
  if (n_range.lo < 1) throw DomainError("--n must be at least 1");

  std::vector<int> rs;
  for (long r = r_range.lo; r <= r_range.hi; ++r) rs.push_back(static_cast<int>(r));

  Engine engine = make_engine(opts);
  const VerificationReport report = verify_formulas(rs, n_range.lo, n_range.hi, engine);
  emit(opts, opts.format == "json" ? render_verify_json(report, 3)
                                   : render_verify_text(report));
  return report.all_match() ? 0 : 2;
}

int cmd_oracle(const CommonOptions& opts) {
  const int k = resolve_k(opts);
  const Range n_range = parse_range(opts.n_spec, "--n");
  if (n_range.lo < 1) throw DomainError("--n must be at least 1");

  Engine engine = make_engine(opts);
  std::vector<OracleRow> rows;
  bool all_match = true;
  for (long n = n_range.lo; n <= n_range.hi; ++n) {
    const QPoly exact = engine.distribution(k, static_cast<int>(n));
    const QPoly brute = distribution_brute(Permutation::identity(k),
                                           static_cast<int>(n), brute_guard(opts, n));
    OracleRow row;
    row.n = n;
    row.match = exact == brute;
    if (!row.match) {
      row.engine_text = exact.to_text();
      row.brute_text = brute.to_text();
      all_match = false;
    }
    rows.push_back(std::move(row));
  }
  emit(opts, opts.format == "json" ? render_oracle_json(rows, k)
                                   : render_oracle_text(rows));
  return all_match ? 0 : 2;
}

int cmd_moments(const CommonOptions& opts, int order) {
  const int k = resolve_k(opts);
  const Range n_range = parse_range(opts.n_spec, "--n");
  if (n_range.lo < 1) throw DomainError("--n must be at least 1");
  if (order < 1) throw DomainError("--order must be at least 1");

  Engine engine = make_engine(opts);
  std::vector<MomentReport> reports;
  for (long n = n_range.lo; n <= n_range.hi; ++n) {
    const QPoly poly = obtain_distribution(opts, k, n, "exact", engine);
    reports.push_back(moment_report(poly, k, n, order));
  }
  emit(opts, opts.format == "json" ? render_moments_json(reports, order)
                                   : render_moments_text(reports));
  return 0;
}

}  // namespace gwilf::cli

#include "gwilf/common.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>

#include "gwilf/errors.hpp"

namespace gwilf::cli {

namespace {

long parse_long(const std::string& text, const char* flag_name) {
  if (text.empty()) throw DomainError(std::string(flag_name) + ": empty number");
  for (const char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError(std::string(flag_name) + ": invalid number \"" + text + "\"");
  return std::stol(text);
}

}  // namespace

Range parse_range(const std::string& spec, const char* flag_name) {
  Range range;
  const std::size_t dots = spec.find("..");
  if (dots == std::string::npos) {
    range.lo = range.hi = parse_long(spec, flag_name);
  } else {
    range.lo = parse_long(spec.substr(0, dots), flag_name);
    range.hi = parse_long(spec.substr(dots + 2), flag_name);
  }
  if (range.lo > range.hi)
    throw DomainError(std::string(flag_name) + ": empty range \"" + spec + "\"");
  return range;
}

int resolve_k(const CommonOptions& opts) {
  int k = opts.k;
  if (!opts.pattern.empty()) {
    const std::string& p = opts.pattern;
    bool increasing = p.size() >= 3 && p.size() <= 9;
    for (std::size_t i = 0; increasing && i < p.size(); ++i)
      if (p[i] != static_cast<char>('1' + i)) increasing = false;
    if (!increasing)
      throw DomainError("--pattern: only increasing patterns \"123\", \"1234\", ... are "
                        "supported, got \"" + p + "\"");
    const int pattern_k = static_cast<int>(p.size());
    if (k != 0 && k != pattern_k)
      throw DomainError("--k and --pattern disagree");
    k = pattern_k;
  }
  if (k == 0) throw DomainError("one of --k or --pattern is required");
  if (k < 3) throw DomainError("--k must be at least 3");
  return k;
}

Engine make_engine(const CommonOptions& opts) {
  EngineOptions engine_opts;
  engine_opts.threads = opts.threads;
  engine_opts.max_states = opts.max_states;
  engine_opts.max_seconds = opts.max_seconds;
  if (opts.force) engine_opts.exact_guard = std::numeric_limits<int>::max();
  return Engine(engine_opts);
}

int brute_guard(const CommonOptions& opts, long n) {
  return opts.force ? static_cast<int>(n) : 10;
}

void emit(const CommonOptions& opts, const std::string& body) {
  if (opts.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + opts.out_path);
  out << body;
  if (!out) throw Error("failed writing output file " + opts.out_path);
}

}  // namespace gwilf::cli

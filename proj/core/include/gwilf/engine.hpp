#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gwilf/qpoly.hpp"

namespace gwilf {

// Evaluates the beheading functional equation for the increasing pattern
// [1..k] by a level-by-level sweep over run-length-encoded exponent states.
//
// Because every substitution step maps each catalytic variable to a power of
// q times another catalytic variable, and all variables start at 1, the
// variables never need to exist symbolically: a position is fully described
// by the (k-2)-tuple of q-exponents of its catalytic families. A state is
// the weakly increasing sequence of those tuples, run-length encoded.
//
// Exact mode computes the full distribution polynomial (exponential in n but
// feasible at small n); truncated mode clamps every exponent at r+1 and caps
// all polynomials at order r, which leaves the coefficients of q^0..q^r
// intact and runs in time polynomial in n.

enum class EngineMode { exact, truncated };

struct EngineConfig {
  int k = 3;
  EngineMode mode = EngineMode::exact;
  unsigned r = 0;  // truncation order; meaningful in truncated mode only
};

// Exponent tuple at one position: entry m (0-based) is the q-exponent of the
// family counting increasing subsequences of length m+2 starting there.
// Entry 0 drives the prefactor; the last entry is incremented on beheading.
using ExponentTuple = std::vector<std::uint32_t>;

// Run-length-encoded weakly increasing sequence of exponent tuples.
// Packed layout, per run: [count, e_0, ..., e_{width-1}].
class SchemeState {
 public:
  struct Run {
    ExponentTuple tuple;
    std::uint64_t count = 0;
  };

  explicit SchemeState(unsigned width = 1) : width_(width) {}

  // Single run of n all-zero tuples: every catalytic variable starts at 1.
  static SchemeState initial(int n, int k);
  // Canonicalizes (drops zero-count runs, merges equal adjacent tuples) and
  // validates the componentwise weakly increasing invariant.
  static SchemeState from_runs(int k, const std::vector<Run>& runs);

  unsigned width() const { return width_; }  // k - 2
  std::size_t run_count() const { return data_.size() / (1 + width_); }
  std::uint64_t total_count() const;  // current n
  bool empty() const { return data_.empty(); }
  std::vector<Run> runs() const;
  bool weakly_increasing() const;

  // Packed representation; exposed for the evaluator and hashing.
  const std::vector<std::uint32_t>& packed() const { return data_; }
  static SchemeState from_packed(unsigned width, std::vector<std::uint32_t> data);

  bool operator==(const SchemeState& other) const = default;

 private:
  unsigned width_;
  std::vector<std::uint32_t> data_;
};

struct Transition {
  std::uint64_t prefactor_exp = 0;
  SchemeState child;
};

SchemeState initial_state(int n, int k);

// All beheading choices from state s, one per position, grouped run by run
// (positions within a run in ascending order). In truncated mode, children
// are clamped at r+1 and choices whose prefactor exponent exceeds r are
// omitted (they cannot touch coefficients of q^0..q^r).
std::vector<Transition> transitions(const SchemeState& s, const EngineConfig& cfg);

struct SchemeStats {
  std::uint64_t states_visited = 0;
  std::uint64_t polynomial_ops = 0;
  std::uint64_t peak_level_width = 0;
};

struct EngineOptions {
  int threads = 1;
  std::uint64_t max_states = 0;  // 0 = unlimited
  double max_seconds = 0.0;      // 0 = unlimited
  // Exact-mode feasibility guard for distribution(); overrides the per-k
  // defaults (k=3: 16, k=4: 10, k>=5: 9) when set.
  std::optional<int> exact_guard;
};

int default_exact_guard(int k);

class Engine {
 public:
  Engine() = default;
  explicit Engine(EngineOptions options) : options_(options) {}

  // Memoized evaluation of the functional equation at an arbitrary state.
  // Deterministic for any thread count. Exceeding a configured budget raises
  // ResourceLimitError. Completed top-level results are cached for reuse.
  QPoly evaluate(const SchemeState& start, const EngineConfig& cfg);

  // Full distribution polynomial of [1..k]-occurrences over S_n (exact
  // mode), subject to the feasibility guard.
  QPoly distribution(int k, int n);

  // Coefficients of q^0..q^r: entry j counts n-permutations with exactly j
  // occurrences of [1..k].
  std::vector<BigInt> truncated_counts(int k, unsigned r, int n);
  BigInt count_exactly(int k, unsigned r, int n);

  // Counters for the most recent evaluate() call (zero after a cache hit).
  const SchemeStats& run_stats() const { return stats_; }
  const EngineOptions& options() const { return options_; }
  void clear_cache() { results_.clear(); }

 private:
  EngineOptions options_;
  SchemeStats stats_;
  // (k, mode, r, packed start state) -> completed result
  std::map<std::tuple<int, int, unsigned, std::vector<std::uint32_t>>, QPoly> results_;
};

}  // namespace gwilf

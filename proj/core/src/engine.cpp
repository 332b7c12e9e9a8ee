#include "gwilf/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "gwilf/errors.hpp"

namespace gwilf {

namespace {

using PackedState = std::vector<std::uint32_t>;
using Clock = std::chrono::steady_clock;

struct PackedHash {
  using is_transparent = void;
  std::size_t operator()(std::span<const std::uint32_t> s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
  std::size_t operator()(const PackedState& v) const noexcept {
    return (*this)(std::span<const std::uint32_t>(v));
  }
};

struct PackedEq {
  using is_transparent = void;
  static bool eq(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
  }
  bool operator()(const PackedState& a, const PackedState& b) const noexcept {
    return eq(a, b);
  }
  bool operator()(const PackedState& a, std::span<const std::uint32_t> b) const noexcept {
    return eq(a, b);
  }
  bool operator()(std::span<const std::uint32_t> a, const PackedState& b) const noexcept {
    return eq(a, b);
  }
  bool operator()(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const noexcept {
    return eq(a, b);
  }
};

// Dense coefficient accumulator (ascending exponents, not yet canonical).
struct Acc {
  std::vector<BigInt> c;
};

using LevelMap = std::unordered_map<PackedState, Acc, PackedHash, PackedEq>;

struct TransitionScratch {
  PackedState child;
  ExponentTuple bumped;
};

// Enumerates the beheading choices of a packed state, run by run, positions
// within a run in ascending order. Children are emitted through fn as packed
// spans valid only during the call.
//
// Removing position i multiplies the prefactor by q^(c_i[0] * #after) and,
// for every later position, increments the last tuple entry and adds c_i[m+1]
// to entry m. In truncated mode entries clamp at r+1 and choices with
// prefactor exponent > r are suppressed.
template <typename Fn>
void for_each_transition(std::span<const std::uint32_t> state, unsigned width,
                         bool truncated, unsigned r, TransitionScratch& scratch, Fn&& fn) {
  const unsigned stride = 1 + width;
  const std::size_t nruns = state.size() / stride;
  const std::uint32_t clamp_at =
      truncated ? r + 1 : std::numeric_limits<std::uint32_t>::max();

  std::uint64_t total = 0;
  for (std::size_t g = 0; g < nruns; ++g) total += state[g * stride];

  PackedState& child = scratch.child;
  ExponentTuple& bumped = scratch.bumped;

  std::uint64_t before = 0;
  for (std::size_t g = 0; g < nruns; ++g) {
    const std::uint32_t* run = state.data() + g * stride;
    const std::uint32_t run_len = run[0];
    const std::uint32_t* tuple = run + 1;
    const std::uint64_t later_runs = total - before - run_len;

    const auto bump = [&](const std::uint32_t* t) {
      bumped.assign(t, t + width);
      for (unsigned m = 0; m + 1 < width; ++m)
        bumped[m] = static_cast<std::uint32_t>(
            std::min<std::uint64_t>(std::uint64_t{bumped[m]} + tuple[m + 1], clamp_at));
      bumped[width - 1] = static_cast<std::uint32_t>(
          std::min<std::uint64_t>(std::uint64_t{bumped[width - 1]} + 1, clamp_at));
      return bumped.data();
    };
    const auto append_run = [&](std::uint64_t count, const std::uint32_t* t) {
      if (count == 0) return;
      if (child.size() >= stride) {
        std::uint32_t* last = child.data() + child.size() - stride;
        if (std::equal(t, t + width, last + 1)) {
          last[0] += static_cast<std::uint32_t>(count);
          return;
        }
      }
      child.push_back(static_cast<std::uint32_t>(count));
      child.insert(child.end(), t, t + width);
    };

    for (std::uint32_t j = 1; j <= run_len; ++j) {
      const std::uint64_t after = (run_len - j) + later_runs;
      const std::uint64_t prefactor_exp = std::uint64_t{tuple[0]} * after;
      if (truncated && prefactor_exp > r) continue;

      child.clear();
      child.insert(child.end(), state.begin(), state.begin() + g * stride);
      append_run(j - 1, tuple);
      append_run(run_len - j, bump(tuple));
      for (std::size_t h = g + 1; h < nruns; ++h) {
        const std::uint32_t* rh = state.data() + h * stride;
        append_run(rh[0], bump(rh + 1));
      }
      fn(prefactor_exp, std::span<const std::uint32_t>(child));
    }
    before += run_len;
  }
}

void accumulate_shifted(Acc& dst, const Acc& src, std::uint64_t shift_exp,
                        bool truncated, unsigned r) {
  std::size_t limit = src.c.size() + static_cast<std::size_t>(shift_exp);
  if (truncated) limit = std::min<std::size_t>(limit, r + 1);
  if (dst.c.size() < limit) dst.c.resize(limit);
  for (std::size_t i = 0; i + shift_exp < limit; ++i) dst.c[i + shift_exp] += src.c[i];
}

struct BudgetTracker {
  std::uint64_t max_states;
  double max_seconds;
  Clock::time_point start;

  void check(std::uint64_t states_so_far) const {
    if (max_states && states_so_far > max_states)
      throw ResourceLimitError("engine: state budget exceeded (" +
                               std::to_string(max_states) + " states)");
    if (max_seconds > 0.0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed > max_seconds)
        throw ResourceLimitError("engine: time budget exceeded (" +
                                 std::to_string(max_seconds) + " s)");
    }
  }
};

struct ChunkResult {
  LevelMap out;
  std::uint64_t poly_ops = 0;
};

void process_chunk(std::span<const LevelMap::value_type* const> entries, unsigned width,
                   bool truncated, unsigned r, LevelMap& out, std::uint64_t& poly_ops) {
  TransitionScratch scratch;
  for (const auto* entry : entries) {
    const PackedState& state = entry->first;
    const Acc& weight = entry->second;
    for_each_transition(
        std::span<const std::uint32_t>(state), width, truncated, r, scratch,
        [&](std::uint64_t prefactor_exp, std::span<const std::uint32_t> child) {
          auto it = out.find(child);
          if (it == out.end())
            it = out.emplace(PackedState(child.begin(), child.end()), Acc{}).first;
          accumulate_shifted(it->second, weight, prefactor_exp, truncated, r);
          ++poly_ops;
        });
  }
}

}  // namespace

int default_exact_guard(int k) {
  if (k <= 3) return 16;
  if (k == 4) return 10;
  return 9;
}

SchemeState SchemeState::initial(int n, int k) {
  if (k < 3) throw DomainError("SchemeState::initial: k must be at least 3");
  if (n < 1) throw DomainError("SchemeState::initial: n must be positive");
  SchemeState s(static_cast<unsigned>(k - 2));
  s.data_.assign(1 + s.width_, 0);
  s.data_[0] = static_cast<std::uint32_t>(n);
  return s;
}

SchemeState SchemeState::from_runs(int k, const std::vector<Run>& runs) {
  if (k < 3) throw DomainError("SchemeState::from_runs: k must be at least 3");
  const unsigned width = static_cast<unsigned>(k - 2);
  SchemeState s(width);
  const ExponentTuple* prev = nullptr;
  for (const auto& run : runs) {
    if (run.tuple.size() != width)
      throw DomainError("SchemeState::from_runs: tuple width must be k-2");
    if (run.count > std::numeric_limits<std::uint32_t>::max())
      throw DomainError("SchemeState::from_runs: run count out of range");
    if (run.count == 0) continue;
    if (prev) {
      for (unsigned m = 0; m < width; ++m)
        if (run.tuple[m] < (*prev)[m])
          throw DomainError("SchemeState::from_runs: tuples must be weakly increasing");
    }
    if (!s.data_.empty()) {
      std::uint32_t* last = s.data_.data() + s.data_.size() - (1 + width);
      if (std::equal(run.tuple.begin(), run.tuple.end(), last + 1)) {
        last[0] += static_cast<std::uint32_t>(run.count);
        prev = &run.tuple;
        continue;
      }
    }
    s.data_.push_back(static_cast<std::uint32_t>(run.count));
    s.data_.insert(s.data_.end(), run.tuple.begin(), run.tuple.end());
    prev = &run.tuple;
  }
  return s;
}

SchemeState SchemeState::from_packed(unsigned width, std::vector<std::uint32_t> data) {
  SchemeState s(width);
  s.data_ = std::move(data);
  return s;
}

std::uint64_t SchemeState::total_count() const {
  const unsigned stride = 1 + width_;
  std::uint64_t total = 0;
  for (std::size_t g = 0; g < run_count(); ++g) total += data_[g * stride];
  return total;
}

std::vector<SchemeState::Run> SchemeState::runs() const {
  const unsigned stride = 1 + width_;
  std::vector<Run> out;
  out.reserve(run_count());
  for (std::size_t g = 0; g < run_count(); ++g) {
    const std::uint32_t* run = data_.data() + g * stride;
    out.push_back(Run{ExponentTuple(run + 1, run + 1 + width_), run[0]});
  }
  return out;
}

bool SchemeState::weakly_increasing() const {
  const unsigned stride = 1 + width_;
  for (std::size_t g = 1; g < run_count(); ++g) {
    const std::uint32_t* prev = data_.data() + (g - 1) * stride + 1;
    const std::uint32_t* cur = data_.data() + g * stride + 1;
    for (unsigned m = 0; m < width_; ++m)
      if (cur[m] < prev[m]) return false;
  }
  return true;
}

SchemeState initial_state(int n, int k) { return SchemeState::initial(n, k); }

std::vector<Transition> transitions(const SchemeState& s, const EngineConfig& cfg) {
  if (cfg.k < 3) throw DomainError("transitions: k must be at least 3");
  if (s.width() != static_cast<unsigned>(cfg.k - 2))
    throw DomainError("transitions: state width does not match k");
  const bool truncated = cfg.mode == EngineMode::truncated;
  std::vector<Transition> out;
  TransitionScratch scratch;
  for_each_transition(std::span<const std::uint32_t>(s.packed()), s.width(), truncated,
                      cfg.r, scratch,
                      [&](std::uint64_t prefactor_exp, std::span<const std::uint32_t> child) {
                        out.push_back(Transition{
                            prefactor_exp,
                            SchemeState::from_packed(
                                s.width(), PackedState(child.begin(), child.end()))});
                      });
  return out;
}

QPoly Engine::evaluate(const SchemeState& start, const EngineConfig& cfg) {
  if (cfg.k < 3) throw DomainError("evaluate: k must be at least 3");
  if (start.width() != static_cast<unsigned>(cfg.k - 2))
    throw DomainError("evaluate: state width does not match k");
  const bool truncated = cfg.mode == EngineMode::truncated;
  const unsigned r = cfg.r;
  const std::optional<unsigned> result_cap =
      truncated ? std::optional<unsigned>(r) : std::nullopt;

  stats_ = SchemeStats{};

  PackedState start_packed = start.packed();
  if (truncated) {
    // States fed to the truncated scheme live in the clamped lattice.
    const unsigned stride = 1 + start.width();
    for (std::size_t g = 0; g * stride < start_packed.size(); ++g)
      for (unsigned m = 0; m < start.width(); ++m)
        start_packed[g * stride + 1 + m] =
            std::min<std::uint32_t>(start_packed[g * stride + 1 + m], r + 1);
  }

  const auto cache_key = std::make_tuple(cfg.k, static_cast<int>(cfg.mode), truncated ? r : 0u,
                                         start_packed);
  if (auto it = results_.find(cache_key); it != results_.end()) return it->second;

  BudgetTracker budget{options_.max_states, options_.max_seconds, Clock::now()};
  const unsigned width = start.width();

  LevelMap cur;
  {
    Acc unit;
    unit.c.assign(1, BigInt(1));
    cur.emplace(std::move(start_packed), std::move(unit));
  }

  const std::uint64_t levels = start.total_count();
  const int threads = std::max(1, options_.threads);

  for (std::uint64_t level = levels; level >= 1; --level) {
    stats_.peak_level_width = std::max<std::uint64_t>(stats_.peak_level_width, cur.size());
    stats_.states_visited += cur.size();
    budget.check(stats_.states_visited);

    LevelMap next;
    next.reserve(cur.size() * 2 + 16);

    if (threads == 1 || cur.size() < 64) {
      TransitionScratch scratch;
      std::uint64_t processed = 0;
      for (const auto& [state, weight] : cur) {
        for_each_transition(
            std::span<const std::uint32_t>(state), width, truncated, r, scratch,
            [&](std::uint64_t prefactor_exp, std::span<const std::uint32_t> child) {
              auto it = next.find(child);
              if (it == next.end())
                it = next.emplace(PackedState(child.begin(), child.end()), Acc{}).first;
              accumulate_shifted(it->second, weight, prefactor_exp, truncated, r);
              ++stats_.polynomial_ops;
            });
        if ((++processed & 0xFFF) == 0) budget.check(stats_.states_visited);
      }
    } else {
      std::vector<const LevelMap::value_type*> entries;
      entries.reserve(cur.size());
      for (const auto& entry : cur) entries.push_back(&entry);
      const int nthreads = static_cast<int>(
          std::min<std::size_t>(static_cast<std::size_t>(threads), entries.size()));
      std::vector<ChunkResult> results(nthreads);
      std::vector<std::thread> workers;
      const std::size_t chunk = (entries.size() + nthreads - 1) / nthreads;
      for (int t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t]() {
          const std::size_t lo = t * chunk;
          const std::size_t hi = std::min(entries.size(), lo + chunk);
          process_chunk(std::span(entries.data() + lo, hi - lo), width, truncated, r,
                        results[t].out, results[t].poly_ops);
        });
      }
      for (auto& w : workers) w.join();
      // Exact integer addition commutes, so the merge order cannot affect
      // the result; merging in thread order keeps the walk reproducible.
      for (auto& res : results) {
        stats_.polynomial_ops += res.poly_ops;
        for (auto& [key, acc] : res.out) {
          auto it = next.find(key);
          if (it == next.end()) {
            next.emplace(std::move(key), std::move(acc));
          } else {
            Acc& dst = it->second;
            if (dst.c.size() < acc.c.size()) dst.c.resize(acc.c.size());
            for (std::size_t i = 0; i < acc.c.size(); ++i) dst.c[i] += acc.c[i];
          }
        }
      }
      budget.check(stats_.states_visited);
    }
    cur = std::move(next);
  }

  // All positions consumed: exactly the empty state remains, carrying the
  // full path-weight sum.
  QPoly result;
  if (cur.empty()) {
    result = QPoly::constant(1, result_cap);  // start was already empty
  } else {
    Acc& acc = cur.begin()->second;
    result = QPoly::from_coeffs(std::move(acc.c), result_cap);
  }
  results_.emplace(cache_key, result);
  return result;
}

QPoly Engine::distribution(int k, int n) {
  if (k < 3) throw DomainError("distribution: k must be at least 3");
  if (n < 1) throw DomainError("distribution: n must be positive");
  const int guard = options_.exact_guard.value_or(default_exact_guard(k));
  if (n > guard)
    throw ResourceLimitError("distribution: n=" + std::to_string(n) +
                             " exceeds the exact-mode feasibility guard (" +
                             std::to_string(guard) + " for k=" + std::to_string(k) + ")");
  return evaluate(SchemeState::initial(n, k), EngineConfig{k, EngineMode::exact, 0});
}

std::vector<BigInt> Engine::truncated_counts(int k, unsigned r, int n) {
  if (k < 3) throw DomainError("truncated_counts: k must be at least 3");
  if (n < 1) throw DomainError("truncated_counts: n must be positive");
  const QPoly p = evaluate(SchemeState::initial(n, k), EngineConfig{k, EngineMode::truncated, r});
  std::vector<BigInt> counts(r + 1, BigInt(0));
  for (unsigned j = 0; j <= r; ++j) counts[j] = p.coeff(j);
  return counts;
}

BigInt Engine::count_exactly(int k, unsigned r, int n) {
  return truncated_counts(k, r, n).back();
}

}  // namespace gwilf

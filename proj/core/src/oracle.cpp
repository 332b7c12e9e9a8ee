#include "gwilf/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gwilf/errors.hpp"

namespace gwilf {

namespace {

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

bool subset_matches(const Permutation& pi, const Permutation& sigma,
                    const std::vector<int>& idx) {
  const int k = sigma.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if ((pi[idx[a]] < pi[idx[b]]) != (sigma[a] < sigma[b])) return false;
  return true;
}

// starts[m-1][p] = number of increasing subsequences of length m whose first
// position is p.
std::vector<std::vector<std::uint64_t>> increasing_run_starts(std::span<const int> word,
                                                              int max_len) {
  const int n = static_cast<int>(word.size());
  std::vector<std::vector<std::uint64_t>> starts(max_len,
                                                 std::vector<std::uint64_t>(n, 0));
  starts[0].assign(n, 1);
  for (int m = 2; m <= max_len; ++m)
    for (int p = 0; p < n; ++p)
      for (int p2 = p + 1; p2 < n; ++p2)
        if (word[p2] > word[p]) starts[m - 1][p] += starts[m - 2][p2];
  return starts;
}

}  // namespace

std::uint64_t occurrences(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  const int k = sigma.size();
  if (k > n) return 0;
  if (k == 0) return 1;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::uint64_t count = 0;
  do {
    if (subset_matches(pi, sigma, idx)) ++count;
  } while (next_subset(idx, n));
  return count;
}

QPoly distribution_brute(const Permutation& sigma, int n, int guard_max_n) {
  if (n < 1) throw DomainError("distribution_brute: n must be positive");
  if (n > guard_max_n)
    throw ResourceLimitError("distribution_brute: n=" + std::to_string(n) +
                             " exceeds the exhaustive-enumeration guard (" +
                             std::to_string(guard_max_n) + ")");
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  std::vector<BigInt> counts;
  do {
    const std::uint64_t occ = occurrences(Permutation(entries), sigma);
    if (counts.size() < occ + 1) counts.resize(occ + 1, BigInt(0));
    counts[occ] += 1;
  } while (std::next_permutation(entries.begin(), entries.end()));
  return QPoly::from_coeffs(std::move(counts));
}

CatalyticWeight catalytic_weight(std::span<const int> word, int k) {
  if (k < 3) throw DomainError("catalytic_weight: k must be at least 3");
  const int n = static_cast<int>(word.size());
  int max_value = 0;
  for (const int v : word) {
    if (v < 1) throw DomainError("catalytic_weight: values must be positive");
    max_value = std::max(max_value, v);
  }
  {
    std::vector<bool> seen(max_value + 1, false);
    for (const int v : word) {
      if (seen[v]) throw DomainError("catalytic_weight: duplicate value");
      seen[v] = true;
    }
  }
  const auto starts = increasing_run_starts(word, k);
  CatalyticWeight w;
  w.family_exp.assign(k - 2, std::vector<std::uint64_t>(max_value, 0));
  for (int m = 2; m <= k - 1; ++m)
    for (int p = 0; p < n; ++p) w.family_exp[m - 2][word[p] - 1] = starts[m - 1][p];
  for (int p = 0; p < n; ++p) w.q_exp += starts[k - 1][p];
  return w;
}

CatalyticWeight catalytic_weight(const Permutation& pi, int k) {
  return catalytic_weight(std::span<const int>(pi.entries()), k);
}

bool behead_check(const Permutation& pi, int k) {
  const int n = pi.size();
  if (n < 2) throw DomainError("behead_check: permutation too short");
  const int head = pi[0];
  std::vector<int> tail(pi.entries().begin() + 1, pi.entries().end());
  const Permutation beheaded = reduce(tail);

  const CatalyticWeight w = catalytic_weight(pi, k);
  const CatalyticWeight w2 = catalytic_weight(beheaded, k);

  // Values other than the head keep their exponents (re-indexed past it).
  for (int m = 2; m <= k - 1; ++m)
    for (int v = 1; v <= n; ++v) {
      if (v == head) continue;
      const int v2 = v < head ? v : v - 1;
      if (w.family(m)[v - 1] != w2.family(m)[v2 - 1]) return false;
    }

  // Prepending the head creates n-head new length-2 runs starting at it.
  if (w.family(2)[head - 1] != static_cast<std::uint64_t>(n - head)) return false;

  // Each length-(m-1) run of the beheaded permutation starting above the head
  // extends to a length-m run starting at the head.
  for (int m = 3; m <= k - 1; ++m) {
    std::uint64_t sum = 0;
    for (int j = head; j <= n - 1; ++j) sum += w2.family(m - 1)[j - 1];
    if (w.family(m)[head - 1] != sum) return false;
  }

  // Full-pattern occurrences grow by the length-(k-1) runs above the head.
  std::uint64_t sum_top = 0;
  for (int j = head; j <= n - 1; ++j) sum_top += w2.family(k - 1)[j - 1];
  return w.q_exp == w2.q_exp + sum_top;
}

}  // namespace gwilf

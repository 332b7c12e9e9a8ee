#pragma once

#include <cstdint>
#include <vector>

#include "gwilf/permutation.hpp"
#include "gwilf/qpoly.hpp"

namespace gwilf {

// Ground-truth brute force. Everything here favors obvious correctness over
// speed; intended for n small enough to enumerate.

// Number of index subsets i_1 < ... < i_k whose reduction equals sigma,
// by direct enumeration of k-subsets.
std::uint64_t occurrences(const Permutation& pi, const Permutation& sigma);

// Full distribution of the occurrence statistic over S_n:
// sum over all pi in S_n of q^occurrences(pi, sigma). Uncapped.
// n above the guard raises ResourceLimitError.
QPoly distribution_brute(const Permutation& sigma, int n, int guard_max_n = 10);

// Catalytic exponents for the increasing pattern of length k: for each
// family m = 2..k-1 and each value i, the number of increasing subsequences
// of length m whose smallest entry is i, plus the q-exponent (occurrences of
// the full pattern). Defined for any word with distinct positive values
// (beheaded permutations arise as such words before reduction).
struct CatalyticWeight {
  std::uint64_t q_exp = 0;
  // family_exp[m - 2][i - 1]: family m in 2..k-1, value i up to the largest
  // value present in the word.
  std::vector<std::vector<std::uint64_t>> family_exp;

  const std::vector<std::uint64_t>& family(int m) const { return family_exp[m - 2]; }
};

CatalyticWeight catalytic_weight(std::span<const int> word, int k);
CatalyticWeight catalytic_weight(const Permutation& pi, int k);

// Verifies the beheading identity on pi: removing the first entry and
// re-reducing changes the catalytic exponents in the prescribed way
// (suffix families shift and absorb the removed value's contributions).
bool behead_check(const Permutation& pi, int k);

}  // namespace gwilf

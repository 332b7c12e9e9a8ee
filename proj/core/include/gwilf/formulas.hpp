#pragma once

#include <span>

#include "gwilf/bigint.hpp"
#include "gwilf/engine.hpp"
#include "gwilf/qpoly.hpp"
#include "gwilf/verification.hpp"

namespace gwilf {

// Distribution of the single-element pattern: n! * q^n (1 for n = 0).
QPoly q_count_single(long n);

// q-factorial [n]! = prod_{j=1..n} (1 + q + ... + q^{j-1}), the inversion
// distribution over S_n.
QPoly q_factorial(long n);

// Closed forms for the number of n-permutations with exactly r occurrences
// of the increasing length-3 pattern, r = 0..7. Each is a factorial ratio
// times an integer polynomial in n, transcribed verbatim; r = 0..2 are
// proven, the rest are conjectural and arbitrated against the engine by
// verify_formulas.
int closed_form_max_r();       // 7
long closed_form_n_min(int r); // smallest n with all factorial arguments >= 0

// Exact integer value. DomainError when n < n_min(r) (the formula is
// undefined there, not zero); IntegrityError if the exact rational value is
// not an integer (reported, never rounded).
BigInt a_closed_form(int r, long n);

// Compares a_closed_form against engine counts for every r in rs and
// n in [n_lo, n_hi] with n >= n_min(r); rows below n_min are recorded as
// skipped. Mismatches are data, not exceptions.
VerificationReport verify_formulas(std::span<const int> rs, long n_lo, long n_hi,
                                   Engine& engine);

}  // namespace gwilf

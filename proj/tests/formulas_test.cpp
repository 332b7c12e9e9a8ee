#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "gwilf/engine.hpp"
#include "gwilf/errors.hpp"
#include "gwilf/formulas.hpp"
#include "gwilf/oracle.hpp"
#include "golden.hpp"

using gwilf::BigInt;
using gwilf::Engine;
using gwilf::QPoly;

namespace {

BigInt catalan(long n) {
  return gwilf::factorial(2 * n) / (gwilf::factorial(n) * gwilf::factorial(n + 1));
}

}  // namespace

TEST_CASE("single-element pattern distribution") {
  CHECK(gwilf::q_count_single(1) == QPoly::monomial(BigInt(1), 1));
  CHECK(gwilf::q_count_single(3) == QPoly::monomial(BigInt(6), 3));
  CHECK(gwilf::q_count_single(0) == QPoly::one());
}

TEST_CASE("q-factorial") {
  CHECK(gwilf::q_factorial(3) ==
        QPoly::from_coeffs({BigInt(1), BigInt(2), BigInt(2), BigInt(1)}));
  CHECK(gwilf::q_factorial(0) == QPoly::one());
  for (long n = 0; n <= 8; ++n)
    CHECK(gwilf::q_factorial(n).eval_at_one() == gwilf::factorial(n));
}

TEST_CASE("q-factorial is the inversion distribution") {
  for (int n = 1; n <= 8; ++n)
    CHECK(gwilf::q_factorial(n) ==
          gwilf::distribution_brute(gwilf::Permutation::identity(2), n));
}

TEST_CASE("closed-form spot values") {
  CHECK(gwilf::a_closed_form(1, 4) == 6);
  CHECK(gwilf::a_closed_form(2, 4) == 3);
  CHECK(gwilf::a_closed_form(0, 5) == 42);
  CHECK(gwilf::a_closed_form(3, 5) == 7);   // q^3 coefficient of the n=5 table
  CHECK(gwilf::a_closed_form(1, 3) == 1);
}

TEST_CASE("closed form r=0 is the catalan formula") {
  for (long n = 1; n <= 20; ++n) CHECK(gwilf::a_closed_form(0, n) == catalan(n));
}

TEST_CASE("closed form r=1 equals (3/n) C(2n, n-3)") {
  for (long n = 3; n <= 20; ++n) {
    const gwilf::Rational alt(3 * gwilf::binomial(2 * n, n - 3), n);
    CHECK(denominator(alt) == 1);
    CHECK(gwilf::a_closed_form(1, n) == numerator(alt));
  }
}

TEST_CASE("domain minimums") {
  const std::array<long, 8> n_min = {1, 3, 4, 5, 4, 5, 6, 5};
  for (int r = 0; r <= 7; ++r) {
    CHECK(gwilf::closed_form_n_min(r) == n_min[r]);
    CHECK_THROWS_AS(gwilf::a_closed_form(r, n_min[r] - 1), gwilf::DomainError);
    CHECK_NOTHROW(gwilf::a_closed_form(r, n_min[r]));
  }
  CHECK_THROWS_AS(gwilf::a_closed_form(8, 10), gwilf::DomainError);
  CHECK_THROWS_AS(gwilf::a_closed_form(-1, 10), gwilf::DomainError);
}

TEST_CASE("closed forms are integral over the working window") {
  for (int r = 0; r <= 7; ++r)
    for (long n = gwilf::closed_form_n_min(r); n <= 25; ++n)
      CHECK_NOTHROW(gwilf::a_closed_form(r, n));
}

TEST_CASE("verification against the engine, proven range") {
  Engine engine;
  const std::array<int, 3> rs = {0, 1, 2};
  const auto report = gwilf::verify_formulas(rs, 1, 12, engine);
  CHECK(report.all_match());
  CHECK(report.mismatch_count() == 0);
  // n=1,2 rows for r=1,2 fall below the domain and are skipped, not checked.
  CHECK(!report.skipped.empty());
  for (const auto& skip : report.skipped) CHECK(skip.n < gwilf::closed_form_n_min(skip.r));
}

TEST_CASE("verification over all closed forms at small n") {
  Engine engine;
  const std::array<int, 8> rs = {0, 1, 2, 3, 4, 5, 6, 7};
  const auto report = gwilf::verify_formulas(rs, 1, 12, engine);
  for (const auto& cell : report.cells) {
    CAPTURE(cell.r);
    CAPTURE(cell.n);
    CHECK(cell.match);
  }
}

TEST_CASE("verification report bookkeeping") {
  gwilf::VerificationReport report;
  CHECK(report.all_match());
  report.cells.push_back({1, 5, BigInt(3), BigInt(3), true, ""});
  CHECK(report.all_match());
  report.cells.push_back({2, 6, BigInt(3), BigInt(4), false, ""});
  CHECK(!report.all_match());
  CHECK(report.mismatch_count() == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gwilf/analysis.hpp"
#include "gwilf/engine.hpp"
#include "gwilf/errors.hpp"
#include "gwilf/formulas.hpp"
#include "gwilf/oracle.hpp"
#include "golden.hpp"

using gwilf::BigInt;
using gwilf::Engine;
using gwilf::QPoly;
using gwilf::Rational;

TEST_CASE("mean") {
  CHECK(gwilf::mean(golden::f(3)) == Rational(1, 6));
  Engine engine;
  for (int n = 3; n <= 8; ++n)
    CHECK(gwilf::mean(engine.distribution(3, n)) == Rational(gwilf::binomial(n, 3), 6));
  // Point mass at n.
  CHECK(gwilf::mean(gwilf::q_count_single(5)) == Rational(5));
}

TEST_CASE("centered moments") {
  CHECK(gwilf::centered_moment(golden::f(3), 1) == Rational(0));
  CHECK(gwilf::centered_moment(golden::f(3), 2) == Rational(5, 36));
  CHECK(gwilf::centered_moment(golden::f(8), 2) == Rational(4417, 90));
  CHECK(gwilf::centered_moment(golden::f(8), 4) == Rational(14537963, 1260));
}

TEST_CASE("moments agree between engine and brute force") {
  Engine engine;
  for (int n = 3; n <= 7; ++n) {
    const QPoly exact = engine.distribution(3, n);
    const QPoly brute = gwilf::distribution_brute(gwilf::Permutation::identity(3), n);
    for (int order = 1; order <= 6; ++order)
      CHECK(gwilf::centered_moment(exact, order) == gwilf::centered_moment(brute, order));
  }
}

TEST_CASE("capped input is rejected") {
  const QPoly capped = golden::f(5).chopped(3);
  CHECK_THROWS_AS(gwilf::mean(capped), gwilf::DomainError);
  CHECK_THROWS_AS(gwilf::centered_moment(capped, 2), gwilf::DomainError);
  CHECK_THROWS_AS(gwilf::mean(QPoly()), gwilf::DomainError);
}

TEST_CASE("variance is nonnegative") {
  for (int n = 1; n <= 7; ++n) {
    const QPoly p = gwilf::distribution_brute(gwilf::Permutation::identity(3), n);
    CHECK(gwilf::centered_moment(p, 2) >= 0);
  }
}

TEST_CASE("standardized moments") {
  Engine engine;
  // Order 2 standardizes to exactly 1.
  CHECK(gwilf::standardized_moment_exact(engine.distribution(3, 6), 2) == Rational(1));
  // Frozen exact value for n=8, order 4 (computed independently from the
  // golden coefficient table).
  CHECK(gwilf::standardized_moment_exact(engine.distribution(3, 8), 4) ==
        Rational(BigInt(654208335), BigInt(136569223)));
  const double approx = gwilf::standardized_moment(engine.distribution(3, 8), 4);
  CHECK(std::abs(approx - 654208335.0 / 136569223.0) < 1e-12);

  CHECK_THROWS_AS(gwilf::standardized_moment_exact(golden::f(3), 3), gwilf::DomainError);
}

TEST_CASE("moment report") {
  Engine engine;
  const auto report = gwilf::moment_report(engine.distribution(3, 3), 3, 3, 6);
  CHECK(report.k == 3);
  CHECK(report.n == 3);
  CHECK(report.mean == Rational(1, 6));
  REQUIRE(report.centered.size() == 5);
  CHECK(report.centered[0] == Rational(5, 36));
  REQUIRE(report.standardized.size() == 5);
  CHECK(report.standardized[0] == 1.0);
}

TEST_CASE("degenerate distributions report undefined standardized moments") {
  const auto report = gwilf::moment_report(gwilf::q_count_single(4), 1, 4, 4);
  CHECK(report.mean == Rational(4));
  CHECK(report.centered[0] == Rational(0));
  for (const double s : report.standardized) CHECK(std::isnan(s));
}

TEST_CASE("normality report") {
  Engine engine;
  const auto reports = gwilf::normality_report(3, 3, 8, 6, engine);
  REQUIRE(reports.size() == 6);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const long n = 3 + static_cast<long>(i);
    CHECK(reports[i].n == n);
    CHECK(reports[i].mean == Rational(gwilf::binomial(n, 3), 6));
    CHECK(reports[i].standardized[0] == 1.0);
    CHECK(reports[i].centered[0] > 0);
  }
  // Fourth standardized moment drifts toward the normal value 3 as n grows.
  const auto& last = reports.back();
  CHECK(last.standardized[2] > 2.0);
  CHECK(last.standardized[2] < 6.0);
}

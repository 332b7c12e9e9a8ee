#pragma once

#include <vector>

#include "gwilf/bigint.hpp"
#include "gwilf/engine.hpp"
#include "gwilf/qpoly.hpp"

namespace gwilf {

// Moments of the statistic whose distribution a polynomial encodes
// (coefficient of q^j = number of outcomes with value j). All arithmetic is
// exact rational; decimal rendering happens only at reporting boundaries.
// Capped polynomials are rejected: moments of a chopped distribution are
// meaningless.

Rational mean(const QPoly& p);
Rational centered_moment(const QPoly& p, int order);

// m_j / sigma^j. Exact for even orders; for odd orders sigma^j is
// irrational in general, so the value is returned as a double.
Rational standardized_moment_exact(const QPoly& p, int even_order);
double standardized_moment(const QPoly& p, int order);

struct MomentReport {
  int k = 0;
  long n = 0;
  Rational mean;
  std::vector<Rational> centered;   // orders 2..max_order
  std::vector<double> standardized; // orders 2..max_order
  int max_order = 0;
};

MomentReport moment_report(const QPoly& p, int k, long n, int max_order);

// One report per n in [n_lo, n_hi], from exact engine distributions.
// Reports only; asymptotic behavior is not asserted.
std::vector<MomentReport> normality_report(int k, long n_lo, long n_hi, int max_order,
                                           Engine& engine);

}  // namespace gwilf

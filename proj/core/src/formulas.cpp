#include "gwilf/formulas.hpp"

#include <algorithm>
#include <string>

#include "gwilf/errors.hpp"

namespace gwilf {

QPoly q_count_single(long n) {
  if (n < 0) throw DomainError("q_count_single: n must be nonnegative");
  return QPoly::monomial(factorial(n), static_cast<unsigned>(n));
}

QPoly q_factorial(long n) {
  if (n < 0) throw DomainError("q_factorial: n must be nonnegative");
  QPoly acc = QPoly::one();
  for (long j = 2; j <= n; ++j) {
    acc = acc * QPoly::from_coeffs(std::vector<BigInt>(j, BigInt(1)));
  }
  return acc;
}

namespace {

// value = lead * n^lead_n_power * poly(n) * (2n - fact_minus)!
//         / ((n - den_minus)! * (n + den_plus)!)
struct ClosedForm {
  long n_min;
  long long lead;
  int lead_n_power;
  std::vector<long long> poly;  // ascending coefficients
  int fact_minus;
  int den_minus;
  int den_plus;
};

const ClosedForm& closed_form(int r) {
  static const std::vector<ClosedForm> forms = {
      // r = 0: 2 (2n-1)! / ((n-1)! (n+1)!)  — the Catalan numbers
      {1, 2, 0, {1}, 1, 1, 1},
      // r = 1: 6 (2n-1)! / ((n-3)! (n+3)!)
      {3, 6, 0, {1}, 1, 3, 3},
      // r = 2: (2n-2)!/((n-4)!(n+5)!) * (59n^2 + 117n + 100)
      {4, 1, 0, {100, 117, 59}, 2, 4, 5},
      // r = 3: (2n-3)!/((n-5)!(n+7)!) * 4n(113n^3 + 506n^2 + 937n + 1804)
      {5, 4, 1, {1804, 937, 506, 113}, 3, 5, 7},
      // r = 4: (2n-4)!/((n-4)!(n+9)!) * (3561n^8 + 3126n^7 - 46806n^6
      //        + 12384n^5 - 659091n^4 + 2630634n^3 + 5520576n^2
      //        + 26283456n - 39191040)
      {4, 1, 0,
       {-39191040, 26283456, 5520576, 2630634, -659091, 12384, -46806, 3126, 3561},
       4, 4, 9},
      // r = 5: (2n-5)!/((n-5)!(n+11)!) * (26246n^10 + 136646n^9 - 115872n^8
      //        + 22524n^7 - 9648450n^6 + 71304534n^5 + 381205612n^4
      //        + 1607633896n^3 + 2800103664n^2 + 3611692800n - 32891443200)
      {5, 1, 0,
       {-32891443200, 3611692800, 2800103664, 1607633896, 381205612, 71304534,
        -9648450, 22524, -115872, 136646, 26246},
       5, 5, 11},
      // r = 6: (2n-6)!/((n-6)!(n+13)!) * (193311n^12 + 2349954n^11
      //        + 13035003n^10 + 95151030n^9 + 406430793n^8 + 2889552582n^7
      //        + 14335663329n^6 + 60005854890n^5 + 313010684796n^4
      //        + 1025692693464n^3 + 1283595375168n^2 - 6909513045120n
      //        - 28177269120000)
      {6, 1, 0,
       {-28177269120000, -6909513045120, 1283595375168, 1025692693464, 313010684796,
        60005854890, 14335663329, 2889552582, 406430793, 95151030, 13035003, 2349954,
        193311},
       6, 6, 13},
      // r = 7: (2n-7)!/((n-5)!(n+15)!) * (1386032n^16 + 13111080n^15
      //        + 22526480n^14 + 355187760n^13 - 1654450096n^12
      //        + 10534951680n^11 + 15797223760n^10 - 305671694640n^9
      //        + 3750695521216n^8 - 26631101348520n^7 - 86395090065440n^6
      //        - 636425872408320n^5 + 3647384624274048n^4
      //        + 11386434230674560n^3 + 103032675524966400n^2
      //        - 157858417817856000n - 763734137886720000)
      {5, 1, 0,
       {-763734137886720000, -157858417817856000, 103032675524966400,
        11386434230674560, 3647384624274048, -636425872408320, -86395090065440,
        -26631101348520, 3750695521216, -305671694640, 15797223760, 10534951680,
        -1654450096, 355187760, 22526480, 13111080, 1386032},
       7, 5, 15},
  };
  if (r < 0 || r >= static_cast<int>(forms.size()))
    throw DomainError("closed form: r must be in 0..7, got " + std::to_string(r));
  return forms[r];
}

}  // namespace

int closed_form_max_r() { return 7; }

long closed_form_n_min(int r) { return closed_form(r).n_min; }

BigInt a_closed_form(int r, long n) {
  const ClosedForm& form = closed_form(r);
  if (n < form.n_min)
    throw DomainError("a_closed_form: n=" + std::to_string(n) + " below domain minimum " +
                      std::to_string(form.n_min) + " for r=" + std::to_string(r));
  BigInt poly_value = 0;
  BigInt n_pow = 1;
  for (const long long c : form.poly) {
    poly_value += c * n_pow;
    n_pow *= n;
  }
  BigInt numerator = form.lead * poly_value;
  for (int p = 0; p < form.lead_n_power; ++p) numerator *= n;
  numerator *= factorial(2 * n - form.fact_minus);
  const BigInt den = factorial(n - form.den_minus) * factorial(n + form.den_plus);
  const Rational value(numerator, den);
  if (denominator(value) != 1)
    throw IntegrityError("a_closed_form: non-integer value " + rational_to_text(value) +
                         " at r=" + std::to_string(r) + ", n=" + std::to_string(n));
  return numerator / den;
}

VerificationReport verify_formulas(std::span<const int> rs, long n_lo, long n_hi,
                                   Engine& engine) {
  VerificationReport report;
  std::vector<int> sorted_rs(rs.begin(), rs.end());
  std::sort(sorted_rs.begin(), sorted_rs.end());
  sorted_rs.erase(std::unique(sorted_rs.begin(), sorted_rs.end()), sorted_rs.end());
  for (const int r : sorted_rs) closed_form(r);  // validate up front

  for (long n = n_lo; n <= n_hi; ++n) {
    int max_eligible_r = -1;
    for (const int r : sorted_rs)
      if (n >= closed_form_n_min(r)) max_eligible_r = std::max(max_eligible_r, r);
      else
        report.skipped.push_back(
            {r, n, "below domain minimum n=" + std::to_string(closed_form_n_min(r))});
    if (max_eligible_r < 0) continue;

    const std::vector<BigInt> counts =
        engine.truncated_counts(3, static_cast<unsigned>(max_eligible_r), static_cast<int>(n));
    for (const int r : sorted_rs) {
      if (n < closed_form_n_min(r)) continue;
      VerificationCell cell;
      cell.r = r;
      cell.n = n;
      cell.engine_value = counts[static_cast<std::size_t>(r)];
      try {
        cell.formula_value = a_closed_form(r, n);
        cell.match = cell.formula_value == cell.engine_value;
      } catch (const IntegrityError& e) {
        cell.match = false;
        cell.note = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace gwilf

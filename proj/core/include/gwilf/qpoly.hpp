#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwilf/bigint.hpp"

namespace gwilf {

// Dense polynomial in the single variable q with arbitrary-precision integer
// coefficients, optionally truncated at a fixed order ("cap").
//
// Canonical form: the highest stored index carries a nonzero coefficient,
// except the zero polynomial, which stores a single zero. When a cap is set,
// no stored index exceeds it. Values are immutable once constructed and safe
// to share across threads.
class QPoly {
 public:
  QPoly() : coeffs_{BigInt(0)} {}  // zero polynomial, uncapped

  static QPoly zero(std::optional<unsigned> cap = std::nullopt);
  static QPoly one();
  static QPoly constant(BigInt value, std::optional<unsigned> cap = std::nullopt);
  static QPoly monomial(BigInt coefficient, unsigned exponent,
                        std::optional<unsigned> cap = std::nullopt);
  // Coefficients by ascending exponent; anything beyond the cap is dropped.
  static QPoly from_coeffs(std::vector<BigInt> coeffs,
                           std::optional<unsigned> cap = std::nullopt);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::optional<unsigned> cap() const { return cap_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }

  BigInt coeff(unsigned exponent) const;
  BigInt eval_at_one() const;

  // Multiplication by q^e. Exponents pushed past the cap are dropped; if e
  // exceeds the cap the result is zero.
  QPoly shifted(unsigned e) const;
  // Drops all terms of exponent > r and sets cap = r.
  QPoly chopped(unsigned r) const;

  // Human-readable rendering, descending exponents: "q^4+3q^2+6q+14".
  std::string to_text() const;

  // Value equality on coefficients; the cap is storage metadata.
  bool operator==(const QPoly& other) const { return coeffs_ == other.coeffs_; }

  // Addition requires equal caps when both are set (CapMismatchError
  // otherwise); the result carries whichever cap is present.
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  // Convolution product, chopped to the smaller cap when either is set.
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator+=(const QPoly& other);

 private:
  std::vector<BigInt> coeffs_;
  std::optional<unsigned> cap_;

  void trim();
};

// Operation-style spellings.
QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly shift(const QPoly& p, unsigned e);
QPoly chop(const QPoly& p, unsigned r);
BigInt eval_at_one(const QPoly& p);
BigInt coeff(const QPoly& p, unsigned exponent);

}  // namespace gwilf

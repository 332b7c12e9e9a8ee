#include "gwilf/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gwilf/errors.hpp"

namespace gwilf {

void QPoly::trim() {
  if (cap_ && coeffs_.size() > static_cast<std::size_t>(*cap_) + 1)
    coeffs_.resize(*cap_ + 1);
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.assign(1, BigInt(0));
}

QPoly QPoly::zero(std::optional<unsigned> cap) {
  QPoly p;
  p.cap_ = cap;
  return p;
}

QPoly QPoly::one() { return constant(BigInt(1)); }

QPoly QPoly::constant(BigInt value, std::optional<unsigned> cap) {
  QPoly p;
  p.coeffs_.assign(1, std::move(value));
  p.cap_ = cap;
  return p;
}

QPoly QPoly::monomial(BigInt coefficient, unsigned exponent, std::optional<unsigned> cap) {
  QPoly p;
  p.cap_ = cap;
  if (cap && exponent > *cap) return p;
  p.coeffs_.assign(exponent + 1, BigInt(0));
  p.coeffs_[exponent] = std::move(coefficient);
  p.trim();
  return p;
}

QPoly QPoly::from_coeffs(std::vector<BigInt> coeffs, std::optional<unsigned> cap) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.cap_ = cap;
  p.trim();
  return p;
}

BigInt QPoly::coeff(unsigned exponent) const {
  if (exponent >= coeffs_.size()) return 0;
  return coeffs_[exponent];
}

BigInt QPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

QPoly QPoly::shifted(unsigned e) const {
  QPoly p;
  p.cap_ = cap_;
  if (e == 0) {
    p.coeffs_ = coeffs_;
    return p;
  }
  if (cap_ && e > *cap_) return p;  // everything pushed past the cap
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.size() + e, BigInt(0));
  std::copy(coeffs_.begin(), coeffs_.end(), p.coeffs_.begin() + e);
  p.trim();
  return p;
}

QPoly QPoly::chopped(unsigned r) const {
  QPoly p;
  p.coeffs_ = coeffs_;
  p.cap_ = r;
  p.trim();
  return p;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  *this = *this + other;
  return *this;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  if (a.cap_ && b.cap_ && *a.cap_ != *b.cap_)
    throw CapMismatchError("add: cap mismatch (" + std::to_string(*a.cap_) + " vs " +
                           std::to_string(*b.cap_) + ")");
  QPoly p;
  p.cap_ = a.cap_ ? a.cap_ : b.cap_;
  p.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) p.coeffs_[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) p.coeffs_[i] += b.coeffs_[i];
  p.trim();
  return p;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly p;
  if (a.cap_ && b.cap_)
    p.cap_ = std::min(*a.cap_, *b.cap_);
  else
    p.cap_ = a.cap_ ? a.cap_ : b.cap_;
  if (a.is_zero() || b.is_zero()) return QPoly::zero(p.cap_);
  const std::size_t limit =
      p.cap_ ? static_cast<std::size_t>(*p.cap_) + 1 : a.coeffs_.size() + b.coeffs_.size() - 1;
  p.coeffs_.assign(std::min(limit, a.coeffs_.size() + b.coeffs_.size() - 1), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < p.coeffs_.size(); ++j)
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.trim();
  return p;
}

std::string QPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt& c = coeffs_[idx];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!first)
      out << (c < 0 ? "-" : "+");
    else if (c < 0)
      out << "-";
    first = false;
    if (idx == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "q";
      if (idx > 1) out << "^" << idx;
    }
  }
  return out.str();
}

QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }
QPoly shift(const QPoly& p, unsigned e) { return p.shifted(e); }
QPoly chop(const QPoly& p, unsigned r) { return p.chopped(r); }
BigInt eval_at_one(const QPoly& p) { return p.eval_at_one(); }
BigInt coeff(const QPoly& p, unsigned exponent) { return p.coeff(exponent); }

}  // namespace gwilf

#include "gwilf/bigint.hpp"

#include <cctype>

#include "gwilf/errors.hpp"

namespace gwilf {

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial: negative argument " + std::to_string(n));
  BigInt acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;  // exact: acc is a binomial coefficient after each step
  }
  return acc;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw DomainError("parse_decimal: empty string");
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw DomainError("parse_decimal: sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw DomainError("parse_decimal: invalid character in \"" + text + "\"");
  }
  return BigInt(text);
}

std::string rational_to_text(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace gwilf

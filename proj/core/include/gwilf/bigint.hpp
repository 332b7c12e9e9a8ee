#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gwilf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(long n);          // n >= 0, else DomainError
BigInt binomial(long n, long k);   // 0 when k < 0 or k > n

// Decimal round-trips used by the serialization layer.
std::string to_decimal(const BigInt& v);
BigInt parse_decimal(const std::string& text);  // DomainError on malformed input

// "p/q", or just "p" when the value is integral.
std::string rational_to_text(const Rational& v);

}  // namespace gwilf

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "hrmc/errors.hpp"

namespace hrmc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt acc = base;
  while (exp) {
    if (exp & 1U) result *= acc;
    exp >>= 1U;
    if (exp) acc *= acc;
  }
  return result;
}

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
inline BigRational pow_rational(const BigInt& base, std::int64_t exp) {
  if (exp >= 0) return BigRational(pow_int(base, static_cast<std::uint64_t>(exp)));
  if (base == 0) throw DivisionByZero("zero raised to a negative power");
  const BigInt den = pow_int(base, static_cast<std::uint64_t>(-exp));
  return den < 0 ? BigRational(BigInt(-1), BigInt(-den)) : BigRational(BigInt(1), den);
}

inline bool is_integral(const BigRational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Returns r as an integer, throwing E when it has a nontrivial denominator.
template <class E = NonIntegralResult>
BigInt require_integral(const BigRational& r, std::string_view what) {
  if (!is_integral(r)) {
    throw E(std::string(what) + ": " + r.str() + " is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }
inline std::string to_decimal(const BigRational& v) { return v.str(); }

/// Parses an optionally signed decimal integer; throws ParseError.
BigInt parse_bigint(std::string_view text);

}  // namespace hrmc

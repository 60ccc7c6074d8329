#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace svs {

// Arbitrary-precision integers and rationals back every theorem-equality
// check; cpp_rational keeps values reduced with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= static_cast<BigInt>(n - i);
    result /= static_cast<BigInt>(i + 1);
  }
  return result;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= static_cast<BigInt>(i);
  return result;
}

inline BigInt pow_bigint(const BigInt& base, std::uint64_t e) {
  BigInt result = 1, b = base;
  while (e != 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

/// base^e for signed exponents (base != 0 when e < 0).
inline Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e >= 0) {
    Rational result = 1, b = base;
    auto n = static_cast<std::uint64_t>(e);
    while (n != 0) {
      if (n & 1) result *= b;
      b *= b;
      n >>= 1;
    }
    return result;
  }
  return 1 / pow_rational(base, -e);
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace svs

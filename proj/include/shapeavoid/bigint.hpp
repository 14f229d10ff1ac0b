#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "shapeavoid/error.hpp"

namespace shapeavoid {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt parse_decimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw validation_error("not a non-negative decimal integer: '" + text + "'");
  return BigInt(text);
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Natural logarithm of a positive integer of any size.
inline double log_big(const BigInt& x) {
  if (x <= 0) throw validation_error("log of a non-positive integer");
  const auto bits = static_cast<long>(boost::multiprecision::msb(x));
  if (bits < 60) return std::log(x.convert_to<double>());
  const long shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace shapeavoid

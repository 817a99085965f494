#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pspread/errors.hpp"

namespace pspread {

// Exact integer/rational arithmetic for bound formulas and identity checks.
// Hot paths (field tables, bitsets) use fixed-width integers instead.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, unsigned long exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Int pow_int(unsigned long base, unsigned long exp) {
  return boost::multiprecision::pow(Int(base), exp);
}

// floor(sqrt(x)) for x >= 0.
inline Int isqrt(const Int& x) {
  if (x < 0) throw BadParams("isqrt of negative value");
  return boost::multiprecision::sqrt(x);
}

// Exact division; throws if the division leaves a remainder.
inline Int exact_div(const Int& num, const Int& den) {
  if (den == 0 || num % den != 0) throw BadParams("exact_div: not divisible");
  return num / den;
}

}  // namespace pspread

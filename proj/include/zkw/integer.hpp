#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zkw {

/// Arbitrary-precision signed integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline std::string to_string(const Integer& x) { return x.str(); }

/// Floor division with non-negative remainder for a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Integer mod_positive(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += (b < 0 ? Integer(-b) : b);
  return r;
}

}  // namespace zkw

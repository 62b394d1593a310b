#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gzs {

// Arbitrary-precision exact scalars. Nothing in this library uses floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& x) { return x.str(); }

// "p/q" for non-integers, plain decimal otherwise.
inline std::string to_string(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) {
    return boost::multiprecision::numerator(x).str();
  }
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace gzs

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace dsp {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational abs(const Rational& q) { return q < 0 ? -q : q; }

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// True for elements of (1/2)Z.
inline bool is_half_integer(const Rational& q) {
  return q.denominator() == 1 || q.denominator() == 2;
}

}  // namespace dsp

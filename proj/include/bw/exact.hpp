#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bw {

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals built on them. All topology computations are exact; doubles
// appear only in the dynamics modules.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(const Int& a, const Int& b) {
  Int x = int_abs(a), y = int_abs(b);
  while (y != 0) {
    Int r = x % y;
    x = y;
    y = r;
  }
  return x;
}

inline double to_double(const Int& a) { return a.convert_to<double>(); }

inline double to_double(const Rat& r) {
  return to_double(r.numerator()) / to_double(r.denominator());
}

/// Parse "p" or "p/q" (q > 0 after normalization) into an exact rational.
inline Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(text)), 1);
    Int num{std::string(text.substr(0, slash))};
    Int den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
}

inline std::string to_string(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

}  // namespace bw

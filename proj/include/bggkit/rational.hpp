// Exact rational scalars used throughout the library.
//
// All primary computations are carried out over arbitrary-precision
// rationals; floating point never enters any result path.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace bggkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical serialization "p/q": lowest terms, q >= 1.  cpp_rational keeps
// its internal representation in exactly that form.
inline std::string rat_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  const BigInt num(s.substr(0, slash));
  const BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline long long to_int64_exact(const Rational& q) {
  if (!is_integer(q)) throw std::invalid_argument("expected integer, got " + rat_str(q));
  return static_cast<long long>(numerator(q));
}

}  // namespace bggkit

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchlab {

using Rational = boost::multiprecision::cpp_rational;

// C(n, r); zero outside 0 <= r <= n. Throws Error on int64 overflow.
std::int64_t binomial(std::int64_t n, std::int64_t r);

inline Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& text);

std::int64_t numerator_i64(const Rational& r);
std::int64_t denominator_i64(const Rational& r);

}  // namespace matchlab

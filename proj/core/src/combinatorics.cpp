#include "matchlab/combinatorics.hpp"

#include "matchlab/error.hpp"

namespace matchlab {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;  // exact: acc*(..) is C(n-r+i, i) * i
    if (acc > INT64_MAX) throw Error("binomial overflow");
  }
  return static_cast<std::int64_t>(acc);
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int p(text.substr(0, slash));
    boost::multiprecision::cpp_int q(text.substr(slash + 1));
    if (q == 0) throw Error("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw Error("malformed fraction: " + text);
  }
}

std::int64_t numerator_i64(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
}

std::int64_t denominator_i64(const Rational& r) {
  return boost::multiprecision::denominator(r).convert_to<std::int64_t>();
}

}  // namespace matchlab

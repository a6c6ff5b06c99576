#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dunkl {

// Exact arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator; zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Pochhammer symbol (a)_m = a(a+1)...(a+m-1); the empty product is 1.
inline Rational pochhammer(const Rational& a, int m) {
  Rational result(1);
  Rational factor = a;
  for (int i = 0; i < m; ++i) {
    result *= factor;
    factor += 1;
  }
  return result;
}

inline Rational rational_pow(const Rational& a, int e) {
  Rational result(1);
  for (int i = 0; i < e; ++i) result *= a;
  return result;
}

inline Rational factorial(int m) {
  Rational result(1);
  for (int i = 2; i <= m; ++i) result *= i;
  return result;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer result(1);
  for (int i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

// Parses "p/q" or "p"; returns nullopt on malformed input or zero denominator.
inline std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

// Renders as "p/q" (always with an explicit denominator, for stable file output).
inline std::string format_rational(const Rational& q) {
  std::ostringstream out;
  out << numerator(q) << '/' << denominator(q);
  return out.str();
}

}  // namespace dunkl

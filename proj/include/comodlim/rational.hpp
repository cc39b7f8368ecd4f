#pragma once

// Exact rational scalars. Everything in this library runs over the rationals;
// floating point never appears in any computational path.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace comodlim {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by the backend on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses a decimal integer or "p/q" literal. Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) throw std::invalid_argument("");
      return Rational(BigInt(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("");
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("");
    return Rational(BigInt(std::string(num)), d);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
}

}  // namespace comodlim

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "hopfchar/errors.hpp"

namespace hopfchar {

/// Arbitrary precision rational, always kept in lowest terms by GMP
/// arithmetic. Expression templates are off so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "p" or "p/q" (optional leading '-'). The result is canonical even
/// when the input is not in lowest terms.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num)) throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  if (!detail::all_digits(den))
    throw ParseError("invalid rational '" + std::string(text) + "'", slash == std::string_view::npos ? 0 : slash + 1);
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  Rational r(n, d);  // canonicalizes
  return negative ? Rational(-r) : r;
}

/// "p/q" in lowest terms with q > 0, or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace hopfchar

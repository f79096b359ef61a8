#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfchar/errors.hpp"
#include "hopfchar/rational.hpp"

namespace hopfchar {

// A coefficient ring is a small descriptor object (it may carry parameters
// such as a truncation modulus) plus a value type with +, -, * and ==.
// Descriptors compare equal iff they describe the same ring.
template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& a,
                                   std::int64_t n, const Rational& q, std::string_view text) {
  typename R::value_type;
  { ring.id() } -> std::convertible_to<std::string>;
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.from_integer(n) } -> std::same_as<typename R::value_type>;
  { ring.from_rational(q) } -> std::same_as<typename R::value_type>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.is_unit(a) } -> std::convertible_to<bool>;
  { ring.inverse(a) } -> std::same_as<typename R::value_type>;
  { ring.divides_integers() } -> std::convertible_to<bool>;
  { ring.format(a) } -> std::convertible_to<std::string>;
  { ring.parse(text) } -> std::same_as<typename R::value_type>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
  { a == a } -> std::convertible_to<bool>;
  { ring == ring } -> std::convertible_to<bool>;
};

/// The field Q of exact rationals.
struct RationalField {
  using value_type = Rational;

  std::string id() const { return "rational"; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_integer(std::int64_t n) const { return Rational(n); }
  Rational from_rational(const Rational& q) const { return q; }
  bool is_zero(const Rational& a) const { return a == 0; }
  bool is_unit(const Rational& a) const { return a != 0; }
  Rational inverse(const Rational& a) const {
    if (a == 0) throw NotInvertible("0 is not a unit in Q");
    return Rational(1) / a;
  }
  bool divides_integers() const { return true; }
  std::string format(const Rational& a) const { return to_string(a); }
  Rational parse(std::string_view text) const { return parse_rational(text); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Element of Q[[X]] / X^(M+1): coefficient vector of fixed length M+1.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  std::size_t length() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    TruncatedSeries r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    TruncatedSeries r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check(a, b);
    const std::size_t len = a.c_.size();
    TruncatedSeries r{std::vector<Rational>(len)};
    for (std::size_t i = 0; i < len; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
  TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static void check(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.c_.size() != b.c_.size()) throw IncompatibleError("truncated series of different moduli");
  }

  std::vector<Rational> c_;
};

/// The ring Q[[X]] / X^(M+1). An element is a unit iff its constant term is
/// nonzero.
class SeriesRing {
 public:
  using value_type = TruncatedSeries;

  explicit SeriesRing(std::size_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw DomainError("series modulus must be >= 1");
  }

  std::size_t modulus() const { return modulus_; }
  std::string id() const { return "series:" + std::to_string(modulus_); }

  TruncatedSeries zero() const { return TruncatedSeries(std::vector<Rational>(modulus_ + 1)); }
  TruncatedSeries one() const { return from_rational(Rational(1)); }
  TruncatedSeries from_integer(std::int64_t n) const { return from_rational(Rational(n)); }
  TruncatedSeries from_rational(const Rational& q) const {
    auto r = zero();
    r[0] = q;
    return r;
  }
  /// X^k, zero when k > M.
  TruncatedSeries monomial(std::size_t k, const Rational& c = Rational(1)) const {
    auto r = zero();
    if (k <= modulus_) r[k] = c;
    return r;
  }
  TruncatedSeries from_coefficients(std::vector<Rational> c) const {
    if (c.size() > modulus_ + 1) throw DomainError("too many coefficients for " + id());
    c.resize(modulus_ + 1);
    return TruncatedSeries(std::move(c));
  }

  bool is_zero(const TruncatedSeries& a) const {
    for (const auto& x : a.coefficients())
      if (x != 0) return false;
    return true;
  }
  bool is_unit(const TruncatedSeries& a) const { return a[0] != 0; }

  TruncatedSeries inverse(const TruncatedSeries& a) const {
    if (!is_unit(a)) throw NotInvertible("series with zero constant term is not a unit");
    // b_0 = 1/a_0, b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}
    auto b = zero();
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (std::size_t k = 1; k <= modulus_; ++k) {
      Rational s = 0;
      for (std::size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
      b[k] = -inv0 * s;
    }
    return b;
  }

  bool divides_integers() const { return true; }

  /// Comma separated coefficients c0,c1,... with trailing zeros dropped.
  std::string format(const TruncatedSeries& a) const {
    std::size_t last = 0;
    for (std::size_t k = 0; k < a.length(); ++k)
      if (a[k] != 0) last = k;
    std::string out;
    for (std::size_t k = 0; k <= last && k < a.length(); ++k) {
      if (k) out += ',';
      out += to_string(a[k]);
    }
    return out.empty() ? "0" : out;
  }

  TruncatedSeries parse(std::string_view text) const {
    std::vector<Rational> c;
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      try {
        c.push_back(parse_rational(piece));
      } catch (const ParseError&) {
        throw ParseError("invalid series coefficient '" + std::string(piece) + "'", start);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (c.size() > modulus_ + 1)
      throw ParseError("series literal has more than " + std::to_string(modulus_ + 1) + " coefficients");
    return from_coefficients(std::move(c));
  }

  friend bool operator==(const SeriesRing& a, const SeriesRing& b) { return a.modulus_ == b.modulus_; }

 private:
  std::size_t modulus_;
};

static_assert(CoefficientRing<RationalField>);
static_assert(CoefficientRing<SeriesRing>);

}  // namespace hopfchar

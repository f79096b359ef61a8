#pragma once

// Functional calculus on the augmentation ideal I_A (functionals vanishing on
// the unit): for a in I_A every a^k vanishes below degree k, so a formal
// power series f = sum c_k X^k evaluates exactly at truncation N using the
// terms k <= N. exp, log, BCH and the units-group inverse are built on it.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfchar/conv_algebra.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/rational.hpp"

namespace hopfchar {

/// Scalar power series c_0 + c_1 X + ... + c_N X^N over Q.
class FormalSeries {
 public:
  FormalSeries() = default;
  explicit FormalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  std::size_t length() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// X^k padded with zeros to `length` coefficients.
  static FormalSeries monomial(std::size_t k, std::size_t length) {
    std::vector<Rational> c(std::max(length, k + 1));
    c[k] = 1;
    return FormalSeries(std::move(c));
  }
  /// 1/(1-X) = sum X^k.
  static FormalSeries geometric(std::size_t order) { return FormalSeries(std::vector<Rational>(order + 1, Rational(1))); }
  /// exp(X) = sum X^k / k!.
  static FormalSeries exponential(std::size_t order) {
    std::vector<Rational> c(order + 1);
    Rational fact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      if (k) fact *= static_cast<long>(k);
      c[k] = Rational(1) / fact;
    }
    return FormalSeries(std::move(c));
  }
  /// log(1+X) = sum_{k>=1} (-1)^{k+1} X^k / k.
  static FormalSeries log_one_plus(std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 1; k <= order; ++k) c[k] = Rational(k % 2 ? 1 : -1, static_cast<long>(k));
    return FormalSeries(std::move(c));
  }

  /// Cauchy product truncated to the shorter length.
  friend FormalSeries operator*(const FormalSeries& f, const FormalSeries& g) {
    const std::size_t len = std::min(f.length(), g.length());
    std::vector<Rational> c(len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j < len; ++j) c[i + j] += f[i] * g[j];
    return FormalSeries(std::move(c));
  }
  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> c_;
};

/// Parses "c0,c1,..." (rationals separated by commas).
inline FormalSeries parse_series(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    try {
      c.push_back(parse_rational(piece));
    } catch (const ParseError&) {
      throw ParseError("invalid series coefficient '" + std::string(piece) + "'", start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return FormalSeries(std::move(c));
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
void require_augmentation_ideal(const TruncatedFunctional<Algebra, Ring>& a, const char* op) {
  if (!a.ring().is_zero(a[0]))
    throw IdealViolation(std::string(op) + ": argument has nonzero value " + a.ring().format(a[0]) +
                         " on the unit, so it is not in the augmentation ideal");
}

template <CoefficientRing Ring>
void require_rational_scalars(const Ring& ring, const char* op) {
  if (!ring.divides_integers()) throw UnsupportedRing(std::string(op) + " needs division by integers in " + ring.id());
}

/// f[a] for a in I_A, evaluated by Horner's rule in the convolution algebra.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> apply_series(const FormalSeries& f, const TruncatedFunctional<Algebra, Ring>& a) {
  require_augmentation_ideal(a, "apply_series");
  const auto& ring = a.ring();
  TruncatedFunctional<Algebra, Ring> result(a.hopf_ptr(), ring);
  if (f.length() == 0) return result;
  const std::size_t top = std::min(f.length() - 1, a.truncation());
  result[0] = ring.from_rational(f[top]);
  for (std::size_t k = top; k-- > 0;) {
    result = convolve(result, a);
    result[0] = result[0] + ring.from_rational(f[k]);
  }
  return result;
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> exp(const TruncatedFunctional<Algebra, Ring>& a) {
  require_rational_scalars(a.ring(), "exp");
  require_augmentation_ideal(a, "exp");
  return apply_series(FormalSeries::exponential(a.truncation()), a);
}

/// Inverse of exp on 1_A + I_A.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> log(const TruncatedFunctional<Algebra, Ring>& u) {
  require_rational_scalars(u.ring(), "log");
  if (!(u[0] == u.ring().one()))
    throw DomainError("log: value on the unit is " + u.ring().format(u[0]) + ", expected 1");
  auto a = u;
  a[0] = u.ring().zero();
  return apply_series(FormalSeries::log_one_plus(u.truncation()), a);
}

/// log(exp(x) * exp(y)).
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> bch(const TruncatedFunctional<Algebra, Ring>& x,
                                       const TruncatedFunctional<Algebra, Ring>& y) {
  x.require_compatible(y, "bch");
  require_augmentation_ideal(x, "bch");
  require_augmentation_ideal(y, "bch");
  return log(convolve(exp(x), exp(y)));
}

/// Inverse in the unit group of A: phi is invertible iff phi(1) is a unit of
/// B, and then phi^{-1} = a0^{-1} sum_k (-a0^{-1} b)^k with b = phi - a0 1_A.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> conv_inverse(const TruncatedFunctional<Algebra, Ring>& phi) {
  const auto& ring = phi.ring();
  if (!ring.is_unit(phi[0]))
    throw NotInvertible("value " + ring.format(phi[0]) + " on the unit is not invertible in " + ring.id());
  const auto inv0 = ring.inverse(phi[0]);
  auto x = phi.scaled(-inv0);
  x[0] = ring.zero();
  return apply_series(FormalSeries::geometric(phi.truncation()), x).scaled(inv0);
}

}  // namespace hopfchar

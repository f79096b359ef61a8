#pragma once

// Exact solver for eta'(t) = eta(t) * gamma(t), eta(0) = 1_A, where gamma is
// a polynomial curve of infinitesimal characters.
//
// Because gamma(t) vanishes on the unit, the degree-n values of eta * gamma
// only involve degree < n values of eta. So eta is built one degree at a
// time: the degree-n component of eta(t) is the integral from 0 of an
// already known polynomial in t.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfchar/characters.hpp"
#include "hopfchar/conv_algebra.hpp"
#include "hopfchar/errors.hpp"

namespace hopfchar {

/// sum_k t^k coeffs[k] with functional coefficients.
template <HopfAlgebra Algebra, CoefficientRing Ring>
class FunctionalPolynomial {
 public:
  using functional_type = TruncatedFunctional<Algebra, Ring>;

  explicit FunctionalPolynomial(std::vector<functional_type> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
    for (const auto& c : coeffs_) coeffs_.front().require_compatible(c, "polynomial");
  }

  const std::vector<functional_type>& coefficients() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  functional_type at(const Rational& t) const {
    const auto& ring = coeffs_.front().ring();
    const auto s = ring.from_rational(t);
    functional_type acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc.scaled(s) + coeffs_[k];
    return acc;
  }

  FunctionalPolynomial derivative() const {
    if (coeffs_.size() == 1) return FunctionalPolynomial({functional_type(coeffs_[0].hopf_ptr(), coeffs_[0].ring())});
    std::vector<functional_type> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      d.push_back(coeffs_[k].scaled(coeffs_[k].ring().from_integer(static_cast<std::int64_t>(k))));
    return FunctionalPolynomial(std::move(d));
  }

 private:
  std::vector<functional_type> coeffs_;
};

/// gamma(t) = sum_j t^j gamma_j with every gamma_j infinitesimal.
template <HopfAlgebra Algebra, CoefficientRing Ring>
class FunctionalCurve {
 public:
  using functional_type = TruncatedFunctional<Algebra, Ring>;

  explicit FunctionalCurve(std::vector<functional_type> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("curve needs at least one coefficient");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      coeffs_.front().require_compatible(coeffs_[j], "curve");
      if (auto c = is_infinitesimal(coeffs_[j]); !c)
        throw DomainError("curve coefficient " + std::to_string(j) +
                          " is not an infinitesimal character: " + Character<Algebra, Ring>::describe(c));
    }
  }

  static FunctionalCurve constant(const InfinitesimalCharacter<Algebra, Ring>& x) {
    return FunctionalCurve({x.functional()});
  }

  const std::vector<functional_type>& coefficients() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const functional_type& front() const { return coeffs_.front(); }

  functional_type at(const Rational& t) const { return FunctionalPolynomial<Algebra, Ring>(coeffs_).at(t); }

 private:
  std::vector<functional_type> coeffs_;
};

/// The solution eta(t) of eta' = eta * gamma, eta(0) = 1, as an exact
/// polynomial in t.
template <HopfAlgebra Algebra, CoefficientRing Ring>
FunctionalPolynomial<Algebra, Ring> evolution_polynomial(const FunctionalCurve<Algebra, Ring>& gamma) {
  using F = TruncatedFunctional<Algebra, Ring>;
  const F& proto = gamma.front();
  const auto& ring = proto.ring();
  const std::size_t n_max = proto.truncation();
  const std::size_t d = gamma.degree();
  // Degree-n values of eta have t-degree at most n (d + 1).
  std::vector<F> eta(n_max * (d + 1) + 1, F(proto.hopf_ptr(), ring));
  eta[0][0] = ring.one();
  F scratch(proto.hopf_ptr(), ring);
  std::size_t used = 1;  // eta[k] is zero for k >= used
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [first, last] = proto.hopf().degree_range(n);
    const std::size_t used_before = used;
    for (std::size_t k = 0; k < used_before; ++k) {
      for (std::size_t j = 0; j <= d; ++j) {
        convolve_degree_into(eta[k], gamma.coefficients()[j], n, scratch);
        const std::size_t m = k + j + 1;
        const auto inv_m = ring.from_rational(Rational(1, static_cast<long>(m)));
        bool touched = false;
        for (auto c = first; c < last; ++c) {
          if (ring.is_zero(scratch[c])) continue;
          eta[m][c] = eta[m][c] + inv_m * scratch[c];
          touched = true;
        }
        if (touched) used = std::max(used, m + 1);
      }
    }
  }
  eta.resize(used, F(proto.hopf_ptr(), ring));
  return FunctionalPolynomial<Algebra, Ring>(std::move(eta));
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> evolve(const FunctionalCurve<Algebra, Ring>& gamma, const Rational& t_end) {
  return evolution_polynomial(gamma).at(t_end);
}

/// evolve(gamma, 1) as a character; failure of the character test means a
/// solver bug and raises InternalConsistencyError.
template <HopfAlgebra Algebra, CoefficientRing Ring>
Character<Algebra, Ring> evol(const FunctionalCurve<Algebra, Ring>& gamma) {
  auto eta = evolve(gamma, Rational(1));
  if (auto c = is_character(eta); !c)
    throw InternalConsistencyError("evolution left the character group: " + Character<Algebra, Ring>::describe(c));
  return {detail::trusted, std::move(eta)};
}

}  // namespace hopfchar

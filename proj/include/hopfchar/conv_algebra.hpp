#pragma once

// Truncated convolution algebra Hom(H, B): a functional is stored by its
// value on every basis element of degree <= N, which is exact because the
// grading makes each degree-n value of a product depend only on degrees <= n.

#include <concepts>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfchar/errors.hpp"
#include "hopfchar/hopf_structure.hpp"
#include "hopfchar/rational.hpp"
#include "hopfchar/rings.hpp"

namespace hopfchar {

template <HopfAlgebra Algebra, CoefficientRing Ring>
class TruncatedFunctional {
 public:
  using algebra_type = Algebra;
  using ring_type = Ring;
  using structure_type = HopfStructure<Algebra>;
  using basis_type = typename Algebra::basis_type;
  using value_type = typename Ring::value_type;
  using index_type = typename structure_type::index_type;

  /// The zero functional.
  TruncatedFunctional(std::shared_ptr<const structure_type> hopf, Ring ring)
      : hopf_(std::move(hopf)), ring_(std::move(ring)), values_(hopf_->size(), ring_.zero()) {}

  const structure_type& hopf() const { return *hopf_; }
  const std::shared_ptr<const structure_type>& hopf_ptr() const { return hopf_; }
  const Ring& ring() const { return ring_; }
  std::size_t truncation() const { return hopf_->truncation(); }
  std::size_t size() const { return values_.size(); }

  const value_type& operator[](index_type i) const { return values_[i]; }
  value_type& operator[](index_type i) { return values_[i]; }

  /// Value on a basis element; degrees above N are rejected.
  value_type at(const basis_type& b) const { return values_[hopf_->index_of(b)]; }
  value_type at(std::string_view text) const { return values_[hopf_->parse_index(text)]; }
  void set(const basis_type& b, value_type v) { values_[hopf_->index_of(b)] = std::move(v); }
  void set(std::string_view text, value_type v) { values_[hopf_->parse_index(text)] = std::move(v); }

  bool compatible(const TruncatedFunctional& o) const { return hopf_->compatible(*o.hopf_) && ring_ == o.ring_; }

  void require_compatible(const TruncatedFunctional& o, const char* op) const {
    if (!compatible(o))
      throw IncompatibleError(std::string(op) + ": operands over " + describe() + " and " + o.describe());
  }

  std::string describe() const {
    return hopf_->id() + "/" + ring_.id() + "/N=" + std::to_string(truncation());
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  TruncatedFunctional& operator+=(const TruncatedFunctional& o) {
    require_compatible(o, "add");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = values_[i] + o.values_[i];
    return *this;
  }
  TruncatedFunctional& operator-=(const TruncatedFunctional& o) {
    require_compatible(o, "subtract");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = values_[i] - o.values_[i];
    return *this;
  }
  friend TruncatedFunctional operator+(TruncatedFunctional a, const TruncatedFunctional& b) { return a += b; }
  friend TruncatedFunctional operator-(TruncatedFunctional a, const TruncatedFunctional& b) { return a -= b; }
  friend TruncatedFunctional operator-(TruncatedFunctional a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }

  /// Pointwise multiplication by a ring element.
  TruncatedFunctional scaled(const value_type& s) const {
    TruncatedFunctional r = *this;
    for (auto& v : r.values_) v = s * v;
    return r;
  }
  TruncatedFunctional scaled(const Rational& q) const
    requires(!std::same_as<value_type, Rational>)
  {
    return scaled(ring_.from_rational(q));
  }

  friend bool operator==(const TruncatedFunctional& a, const TruncatedFunctional& b) {
    return a.compatible(b) && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const structure_type> hopf_;
  Ring ring_;
  std::vector<value_type> values_;
};


/// 1_A = u o epsilon: one on the unit, zero elsewhere.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> conv_unit(std::shared_ptr<const HopfStructure<Algebra>> hopf, Ring ring) {
  TruncatedFunctional<Algebra, Ring> u(std::move(hopf), std::move(ring));
  u[0] = u.ring().one();
  return u;
}

/// Indicator functional of one basis element.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> indicator(std::shared_ptr<const HopfStructure<Algebra>> hopf, Ring ring,
                                             std::string_view basis) {
  TruncatedFunctional<Algebra, Ring> d(std::move(hopf), std::move(ring));
  d.set(basis, d.ring().one());
  return d;
}

/// Values of phi * psi on the degree-n basis only (zero elsewhere).
template <HopfAlgebra Algebra, CoefficientRing Ring>
void convolve_degree_into(const TruncatedFunctional<Algebra, Ring>& phi, const TruncatedFunctional<Algebra, Ring>& psi,
                          std::size_t n, TruncatedFunctional<Algebra, Ring>& out) {
  const auto& hopf = phi.hopf();
  const auto& ring = phi.ring();
  auto [first, last] = hopf.degree_range(n);
  for (auto c = first; c < last; ++c) {
    auto acc = ring.zero();
    for (const auto& t : hopf.coproduct(c)) {
      const auto& l = phi[t.left];
      if (ring.is_zero(l)) continue;
      const auto& r = psi[t.right];
      if (ring.is_zero(r)) continue;
      auto term = l * r;
      if (t.coeff != 1) term = ring.from_integer(t.coeff) * term;
      acc = acc + term;
    }
    out[c] = std::move(acc);
  }
}

/// (phi * psi)(c) = sum over coproduct terms c1 (x) c2 of phi(c1) psi(c2).
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> convolve(const TruncatedFunctional<Algebra, Ring>& phi,
                                            const TruncatedFunctional<Algebra, Ring>& psi) {
  phi.require_compatible(psi, "convolve");
  TruncatedFunctional<Algebra, Ring> out(phi.hopf_ptr(), phi.ring());
  for (std::size_t n = 0; n <= phi.truncation(); ++n) convolve_degree_into(phi, psi, n, out);
  return out;
}

/// Keeps only the degree-n values.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> project(const TruncatedFunctional<Algebra, Ring>& phi, std::size_t n) {
  if (n > phi.truncation())
    throw TruncationOverflow("projection degree " + std::to_string(n) + " above truncation " +
                             std::to_string(phi.truncation()));
  TruncatedFunctional<Algebra, Ring> out(phi.hopf_ptr(), phi.ring());
  auto [first, last] = phi.hopf().degree_range(n);
  for (auto i = first; i < last; ++i) out[i] = phi[i];
  return out;
}

/// phi o S, with S the antipode extended linearly.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> precompose_antipode(const TruncatedFunctional<Algebra, Ring>& phi) {
  const auto& ring = phi.ring();
  TruncatedFunctional<Algebra, Ring> out(phi.hopf_ptr(), ring);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    auto acc = ring.zero();
    for (const auto& s : phi.hopf().antipode(static_cast<typename HopfStructure<Algebra>::index_type>(i)))
      acc = acc + ring.from_integer(s.coeff) * phi[s.index];
    out[static_cast<typename HopfStructure<Algebra>::index_type>(i)] = std::move(acc);
  }
  return out;
}

/// Re-expresses phi over a structure of lower (or equal) truncation by
/// dropping the values above the target degree.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> restrict_truncation(const TruncatedFunctional<Algebra, Ring>& phi,
                                                       std::shared_ptr<const HopfStructure<Algebra>> target) {
  if (!(target->algebra() == phi.hopf().algebra()))
    throw IncompatibleError("cannot restrict " + phi.hopf().id() + " functional to " + target->id());
  if (target->truncation() > phi.truncation())
    throw TruncationOverflow("cannot raise truncation from " + std::to_string(phi.truncation()) + " to " +
                             std::to_string(target->truncation()));
  TruncatedFunctional<Algebra, Ring> out(target, phi.ring());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto idx = static_cast<typename HopfStructure<Algebra>::index_type>(i);
    out[idx] = phi.at(target->element(idx));
  }
  return out;
}

}  // namespace hopfchar

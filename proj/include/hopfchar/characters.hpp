#pragma once

// Character group Char(H, B) and Lie algebra g(H, B) of infinitesimal
// characters at truncation N, plus the Butcher-group view of Char(H_CK, B)
// and the additive view of Char(T(V), B).

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfchar/conv_algebra.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/funcalc.hpp"

namespace hopfchar {

/// Outcome of a membership predicate. On failure `witness` names the
/// offending basis element(s): {"1"} for the unit condition, or the pair
/// {b1, b2} whose product violates the product rule.
struct MembershipCheck {
  bool holds = true;
  std::vector<std::string> witness;

  explicit operator bool() const { return holds; }
};

namespace detail {

// Walks every pair of non-unit basis elements with degree sum <= N (only
// i <= j for commutative algebras) and stops at the first pair for which
// `ok(i, j, product)` is false.
template <HopfAlgebra Algebra, class Pred>
MembershipCheck check_pairs(const HopfStructure<Algebra>& hopf, Pred&& ok) {
  using index_type = typename HopfStructure<Algebra>::index_type;
  const bool commutative = hopf.algebra().is_commutative();
  const auto n = static_cast<index_type>(hopf.size());
  for (index_type i = 1; i < n; ++i) {
    const std::size_t di = hopf.degree(i);
    if (2 * di > hopf.truncation() && commutative) break;
    for (index_type j = commutative ? i : 1; j < n; ++j) {
      if (di + hopf.degree(j) > hopf.truncation()) break;
      const index_type k = hopf.product(i, j);
      if (!ok(i, j, k)) return {false, {hopf.format(i), hopf.format(j)}};
    }
  }
  return {};
}

}  // namespace detail

/// phi(1) = 1 and phi(b1 b2) = phi(b1) phi(b2) for all basis pairs with
/// degree sum <= N. By bilinearity this decides multiplicativity at
/// truncation N.
template <HopfAlgebra Algebra, CoefficientRing Ring>
MembershipCheck is_character(const TruncatedFunctional<Algebra, Ring>& phi) {
  if (!(phi[0] == phi.ring().one())) return {false, {"1"}};
  return detail::check_pairs(phi.hopf(), [&](auto i, auto j, auto k) { return phi[k] == phi[i] * phi[j]; });
}

/// phi(1) = 0 and phi(b1 b2) = phi(b1) eps(b2) + eps(b1) phi(b2); for
/// non-unit b1, b2 the right side is zero.
template <HopfAlgebra Algebra, CoefficientRing Ring>
MembershipCheck is_infinitesimal(const TruncatedFunctional<Algebra, Ring>& phi) {
  if (!phi.ring().is_zero(phi[0])) return {false, {"1"}};
  return detail::check_pairs(phi.hopf(), [&](auto, auto, auto k) { return phi.ring().is_zero(phi[k]); });
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
class Character;
template <HopfAlgebra Algebra, CoefficientRing Ring>
class InfinitesimalCharacter;

namespace detail {
struct trusted_t {};
inline constexpr trusted_t trusted{};
}  // namespace detail

/// A functional known to be a unital algebra morphism H -> B.
template <HopfAlgebra Algebra, CoefficientRing Ring>
class Character {
 public:
  using functional_type = TruncatedFunctional<Algebra, Ring>;

  /// Validates; throws DomainError naming the violating pair.
  explicit Character(functional_type phi) : phi_(std::move(phi)) {
    if (auto c = is_character(phi_); !c) throw DomainError("not a character: " + describe(c));
  }
  Character(detail::trusted_t, functional_type phi) : phi_(std::move(phi)) {}

  const functional_type& functional() const { return phi_; }
  const auto& hopf_ptr() const { return phi_.hopf_ptr(); }
  const Ring& ring() const { return phi_.ring(); }
  std::size_t truncation() const { return phi_.truncation(); }

  friend bool operator==(const Character& a, const Character& b) { return a.phi_ == b.phi_; }

  static std::string describe(const MembershipCheck& c) {
    if (c.witness.size() == 1) return "wrong value on the unit " + c.witness.front();
    std::string s;
    for (const auto& w : c.witness) s += (s.empty() ? "" : " * ") + w;
    return "violation at " + s;
  }

 private:
  functional_type phi_;
};

/// A functional known to be a derivation along the counit.
template <HopfAlgebra Algebra, CoefficientRing Ring>
class InfinitesimalCharacter {
 public:
  using functional_type = TruncatedFunctional<Algebra, Ring>;

  explicit InfinitesimalCharacter(functional_type phi) : phi_(std::move(phi)) {
    if (auto c = is_infinitesimal(phi_); !c)
      throw DomainError("not an infinitesimal character: " + Character<Algebra, Ring>::describe(c));
  }
  InfinitesimalCharacter(detail::trusted_t, functional_type phi) : phi_(std::move(phi)) {}

  const functional_type& functional() const { return phi_; }
  const auto& hopf_ptr() const { return phi_.hopf_ptr(); }
  const Ring& ring() const { return phi_.ring(); }
  std::size_t truncation() const { return phi_.truncation(); }

  friend bool operator==(const InfinitesimalCharacter& a, const InfinitesimalCharacter& b) { return a.phi_ == b.phi_; }

 private:
  functional_type phi_;
};

template <HopfAlgebra Algebra, CoefficientRing Ring>
Character<Algebra, Ring> char_unit(std::shared_ptr<const HopfStructure<Algebra>> hopf, Ring ring) {
  return {detail::trusted, conv_unit(std::move(hopf), std::move(ring))};
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
Character<Algebra, Ring> char_mul(const Character<Algebra, Ring>& phi, const Character<Algebra, Ring>& psi) {
  return {detail::trusted, convolve(phi.functional(), psi.functional())};
}

/// Inverse by precomposition with the antipode.
template <HopfAlgebra Algebra, CoefficientRing Ring>
Character<Algebra, Ring> char_inv(const Character<Algebra, Ring>& phi) {
  return {detail::trusted, precompose_antipode(phi.functional())};
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
Character<Algebra, Ring> char_exp(const InfinitesimalCharacter<Algebra, Ring>& x) {
  return {detail::trusted, exp(x.functional())};
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
InfinitesimalCharacter<Algebra, Ring> char_log(const Character<Algebra, Ring>& phi) {
  return {detail::trusted, log(phi.functional())};
}

/// Commutator [x, y] = x*y - y*x.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> commutator(const TruncatedFunctional<Algebra, Ring>& x,
                                              const TruncatedFunctional<Algebra, Ring>& y) {
  return convolve(x, y) - convolve(y, x);
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
InfinitesimalCharacter<Algebra, Ring> lie_bracket(const InfinitesimalCharacter<Algebra, Ring>& x,
                                                  const InfinitesimalCharacter<Algebra, Ring>& y) {
  return {detail::trusted, commutator(x.functional(), y.functional())};
}

// ---------------------------------------------------------------------------
// Butcher group view of Char(H_CK, B)

/// Tree map a: trees of order <= N -> B, a(empty tree) = 1 implicitly.
/// Trees missing from `values` map to zero.
template <CoefficientRing Ring>
struct TreeMap {
  using value_type = typename Ring::value_type;

  Ring ring;
  std::size_t truncation = 0;
  std::map<RootedTree, value_type> values;

  TreeMap(Ring r, std::size_t n) : ring(std::move(r)), truncation(n) {}

  value_type operator()(const RootedTree& t) const {
    auto it = values.find(t);
    return it == values.end() ? ring.zero() : it->second;
  }
  /// Product over the trees of a forest; the empty forest gives 1.
  value_type operator()(const Forest& f) const {
    auto acc = ring.one();
    for (const auto& t : f.trees()) acc = acc * (*this)(t);
    return acc;
  }
  void set(const RootedTree& t, value_type v) {
    if (t.order() > truncation)
      throw TruncationOverflow("tree " + t.str() + " above truncation " + std::to_string(truncation));
    if (ring.is_zero(v)) values.erase(t);
    else values.insert_or_assign(t, std::move(v));
  }

  friend bool operator==(const TreeMap& a, const TreeMap& b) {
    return a.ring == b.ring && a.truncation == b.truncation && a.values == b.values;
  }
};

/// The multiplicative extension phi_a of a tree map.
template <CoefficientRing Ring>
Character<ConnesKreimerAlgebra, Ring> char_from_tree_values(std::shared_ptr<const CKStructure> hopf,
                                                            const TreeMap<Ring>& a) {
  if (a.truncation != hopf->truncation())
    throw IncompatibleError("tree map truncation " + std::to_string(a.truncation) + " vs structure truncation " +
                            std::to_string(hopf->truncation()));
  TruncatedFunctional<ConnesKreimerAlgebra, Ring> phi(hopf, a.ring);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    auto idx = static_cast<CKStructure::index_type>(i);
    phi[idx] = a(hopf->element(idx));
  }
  return {detail::trusted, std::move(phi)};
}

/// Restriction of a functional to trees.
template <CoefficientRing Ring>
TreeMap<Ring> tree_values(const TruncatedFunctional<ConnesKreimerAlgebra, Ring>& phi) {
  TreeMap<Ring> a(phi.ring(), phi.truncation());
  for (std::size_t i = 1; i < phi.size(); ++i) {
    auto idx = static_cast<CKStructure::index_type>(i);
    const auto& f = phi.hopf().element(idx);
    if (f.size() == 1) a.set(f.trees().front(), phi[idx]);
  }
  return a;
}

template <CoefficientRing Ring>
TreeMap<Ring> tree_values(const Character<ConnesKreimerAlgebra, Ring>& phi) {
  return tree_values(phi.functional());
}

/// Butcher group law (a.b)(t) = sum over ordered subtrees s of b(s_t) a(t \ s),
/// evaluated directly on trees.
template <CoefficientRing Ring>
TreeMap<Ring> butcher_compose(const TreeMap<Ring>& a, const TreeMap<Ring>& b) {
  if (!(a.ring == b.ring) || a.truncation != b.truncation)
    throw IncompatibleError("butcher_compose: tree maps over different rings or truncations");
  TreeMap<Ring> out(a.ring, a.truncation);
  for (const auto& level : enumerate_trees(a.truncation)) {
    for (const auto& t : level) {
      auto acc = a.ring.zero();
      for (const auto& cut : *ordered_subtrees(t)) acc = acc + b(cut.kept) * a(cut.cut);
      out.set(t, std::move(acc));
    }
  }
  return out;
}

/// Inverse in the Butcher group by solving (a . a^{-1})(t) = 0 along
/// ordered subtrees: a^{-1}(t) = -sum_{s != all} a^{-1}(s_t) a(t \ s).
template <CoefficientRing Ring>
TreeMap<Ring> butcher_inverse(const TreeMap<Ring>& a) {
  TreeMap<Ring> inv(a.ring, a.truncation);
  for (const auto& level : enumerate_trees(a.truncation)) {
    for (const auto& t : level) {
      auto acc = a.ring.zero();
      for (const auto& cut : *ordered_subtrees(t)) {
        if (cut.cut.empty()) continue;  // s = all vertices
        acc = acc + inv(cut.kept) * a(cut.cut);
      }
      inv.set(t, -acc);
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Char(T(V), B) is isomorphic to (V*, +)

/// Values on the generators v0..v{d-1}.
template <CoefficientRing Ring>
std::vector<typename Ring::value_type> tensor_char_group_iso(const Character<TensorAlgebra, Ring>& phi) {
  const auto& hopf = phi.functional().hopf();
  std::vector<typename Ring::value_type> out;
  if (hopf.truncation() == 0) return std::vector<typename Ring::value_type>(hopf.algebra().dim(), phi.ring().zero());
  auto [first, last] = hopf.degree_range(1);
  for (auto i = first; i < last; ++i) out.push_back(phi.functional()[i]);
  return out;
}

/// Inverse of tensor_char_group_iso: phi(v_{i1}...v_{ik}) = prod of values.
template <CoefficientRing Ring>
Character<TensorAlgebra, Ring> tensor_char_from_vector(std::shared_ptr<const TensorStructure> hopf, Ring ring,
                                                       const std::vector<typename Ring::value_type>& v) {
  if (v.size() != hopf->algebra().dim())
    throw IncompatibleError("expected " + std::to_string(hopf->algebra().dim()) + " generator values");
  TruncatedFunctional<TensorAlgebra, Ring> phi(hopf, ring);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    auto idx = static_cast<TensorStructure::index_type>(i);
    auto acc = ring.one();
    for (auto l : hopf->element(idx).letters()) acc = acc * v[l];
    phi[idx] = std::move(acc);
  }
  return {detail::trusted, std::move(phi)};
}

}  // namespace hopfchar

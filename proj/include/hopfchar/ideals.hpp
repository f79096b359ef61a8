#pragma once

// Homogeneous Hopf ideals given by finitely many generators, and membership
// in their annihilators Ann(I, B) intersected with the character group or
// the Lie algebra of infinitesimal characters.
//
// Evaluating on generators suffices. For a character phi and any h1, h2:
// phi(h1 g h2) = phi(h1) phi(g) phi(h2). For an infinitesimal character
// phi(h g) = phi(h) eps(g) + eps(h) phi(g) = eps(h) phi(g), because eps(g) = 0.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfchar/characters.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/graded_vector.hpp"

namespace hopfchar {

template <HopfAlgebra Algebra>
class HopfIdealSpec {
 public:
  using basis_type = typename Algebra::basis_type;
  using generator_type = GradedVector<basis_type, Rational>;

  /// Rejects generators that are zero, not homogeneous, of degree 0, or not
  /// killed by the counit.
  HopfIdealSpec(Algebra algebra, std::vector<generator_type> generators)
      : algebra_(std::move(algebra)), generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.empty()) throw DomainError("ideal generator " + std::to_string(i) + " is zero");
      const long d = g.homogeneous_degree();
      if (d < 0) throw DomainError("ideal generator " + std::to_string(i) + " is not homogeneous");
      if (d == 0) throw DomainError("ideal generator " + std::to_string(i) + " has degree 0");
      Rational eps = 0;
      for (const auto& [b, c] : g) eps += c * Rational(algebra_.counit(b));
      if (eps != 0) throw DomainError("counit does not vanish on ideal generator " + std::to_string(i));
      max_degree_ = std::max(max_degree_, static_cast<std::size_t>(d));
    }
  }

  const Algebra& algebra() const { return algebra_; }
  const std::vector<generator_type>& generators() const { return generators_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t degree(std::size_t i) const { return static_cast<std::size_t>(generators_[i].homogeneous_degree()); }

 private:
  Algebra algebra_;
  std::vector<generator_type> generators_;
  std::size_t max_degree_ = 0;
};

struct AnnihilationCheck {
  bool holds = true;
  std::optional<std::size_t> violated_generator;

  explicit operator bool() const { return holds; }
};

/// Linear extension of phi to a rational combination of basis elements.
template <HopfAlgebra Algebra, CoefficientRing Ring>
typename Ring::value_type evaluate(const TruncatedFunctional<Algebra, Ring>& phi,
                                   const GradedVector<typename Algebra::basis_type, Rational>& v) {
  auto acc = phi.ring().zero();
  for (const auto& [b, c] : v) acc = acc + phi.ring().from_rational(c) * phi.at(b);
  return acc;
}

namespace detail {

template <HopfAlgebra Algebra, CoefficientRing Ring>
AnnihilationCheck annihilates_generators(const TruncatedFunctional<Algebra, Ring>& phi,
                                         const HopfIdealSpec<Algebra>& ideal) {
  if (!(phi.hopf().algebra() == ideal.algebra()))
    throw IncompatibleError("ideal over " + ideal.algebra().id() + " applied to " + phi.hopf().id());
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (ideal.degree(i) > phi.truncation()) continue;
    if (!phi.ring().is_zero(evaluate(phi, ideal.generators()[i]))) return {false, i};
  }
  return {};
}

}  // namespace detail

template <HopfAlgebra Algebra, CoefficientRing Ring>
AnnihilationCheck annihilates(const Character<Algebra, Ring>& phi, const HopfIdealSpec<Algebra>& ideal) {
  return detail::annihilates_generators(phi.functional(), ideal);
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
AnnihilationCheck annihilates(const InfinitesimalCharacter<Algebra, Ring>& phi, const HopfIdealSpec<Algebra>& ideal) {
  return detail::annihilates_generators(phi.functional(), ideal);
}

/// Raw functionals must be characters or infinitesimal characters.
template <HopfAlgebra Algebra, CoefficientRing Ring>
AnnihilationCheck annihilates(const TruncatedFunctional<Algebra, Ring>& phi, const HopfIdealSpec<Algebra>& ideal) {
  if (!is_character(phi) && !is_infinitesimal(phi))
    throw DomainError("annihilates: functional is neither a character nor an infinitesimal character");
  return detail::annihilates_generators(phi, ideal);
}

/// Generators t o u + u o t - t u of the symplectic ideal for every
/// unordered pair of trees with |t| + |u| <= N, in enumeration order.
inline HopfIdealSpec<ConnesKreimerAlgebra> symplectic_generators(std::size_t truncation) {
  if (truncation < 2) throw DomainError("symplectic generators need truncation >= 2");
  std::vector<RootedTree> trees;
  for (auto& level : enumerate_trees(truncation - 1)) trees.insert(trees.end(), level.begin(), level.end());
  std::vector<GradedVector<Forest, Rational>> gens;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i; j < trees.size(); ++j) {
      if (trees[i].order() + trees[j].order() > truncation) continue;
      GradedVector<Forest, Rational> g(truncation);
      g.add(Forest(butcher_product(trees[i], trees[j])), Rational(1));
      g.add(Forest(butcher_product(trees[j], trees[i])), Rational(1));
      g.add(Forest({trees[i], trees[j]}), Rational(-1));
      gens.push_back(std::move(g));
    }
  }
  return HopfIdealSpec<ConnesKreimerAlgebra>(ConnesKreimerAlgebra{}, std::move(gens));
}

struct SymplecticCheck {
  bool holds = true;
  std::optional<std::pair<RootedTree, RootedTree>> witness;

  explicit operator bool() const { return holds; }
};

/// a(t o u) + a(u o t) = a(t) a(u) for all trees with |t| + |u| <= N.
template <CoefficientRing Ring>
SymplecticCheck is_symplectic(const TreeMap<Ring>& a) {
  if (a.truncation < 2) return {};
  std::vector<RootedTree> trees;
  for (auto& level : enumerate_trees(a.truncation - 1)) trees.insert(trees.end(), level.begin(), level.end());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i; j < trees.size(); ++j) {
      const auto& t = trees[i];
      const auto& u = trees[j];
      if (t.order() + u.order() > a.truncation) continue;
      if (!(a(butcher_product(t, u)) + a(butcher_product(u, t)) == a(t) * a(u)))
        return {false, std::make_pair(t, u)};
    }
  }
  return {};
}

}  // namespace hopfchar

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfchar/connes_kreimer.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/graded_vector.hpp"
#include "hopfchar/tensor_algebra.hpp"

namespace hopfchar {

/// Basis-level description of a graded connected Hopf algebra whose
/// product maps basis pairs to basis elements (monomial bases).
template <class A>
concept HopfAlgebra = requires(const A& alg, const typename A::basis_type& b, std::size_t n,
                               std::string_view text) {
  typename A::basis_type;
  { alg.id() } -> std::convertible_to<std::string>;
  { alg.is_commutative() } -> std::convertible_to<bool>;
  { alg.unit() } -> std::same_as<typename A::basis_type>;
  { alg.degree(b) } -> std::convertible_to<std::size_t>;
  { alg.basis_up_to(n) } -> std::same_as<std::vector<std::vector<typename A::basis_type>>>;
  { alg.multiply(b, b) } -> std::same_as<typename A::basis_type>;
  { alg.coproduct(b) } -> std::same_as<std::vector<CoproductTerm<typename A::basis_type>>>;
  { alg.antipode(b) } -> std::same_as<GradedVector<typename A::basis_type, std::int64_t>>;
  { alg.counit(b) } -> std::convertible_to<std::int64_t>;
  { alg.format(b) } -> std::convertible_to<std::string>;
  { alg.parse(text) } -> std::same_as<typename A::basis_type>;
};

static_assert(HopfAlgebra<ConnesKreimerAlgebra>);
static_assert(HopfAlgebra<TensorAlgebra>);

/// A Hopf algebra truncated at degree N: the basis of degree <= N with flat
/// indices (degree-major, so index 0 is the unit), plus precomputed
/// coproduct and antipode tables in those indices. Immutable once built, so
/// one instance can be shared by any number of functionals and threads.
template <HopfAlgebra Algebra>
class HopfStructure {
 public:
  using algebra_type = Algebra;
  using basis_type = typename Algebra::basis_type;
  using index_type = std::uint32_t;

  struct Term {
    std::int64_t coeff;
    index_type left;
    index_type right;
  };
  struct Summand {
    std::int64_t coeff;
    index_type index;
  };

  HopfStructure(Algebra algebra, std::size_t truncation) : algebra_(std::move(algebra)), truncation_(truncation) {
    auto levels = algebra_.basis_up_to(truncation_);
    offsets_.push_back(0);
    for (std::size_t d = 0; d < levels.size(); ++d) {
      for (auto& b : levels[d]) {
        lookup_.emplace(algebra_.format(b), static_cast<index_type>(elements_.size()));
        elements_.push_back(std::move(b));
        degrees_.push_back(d);
      }
      offsets_.push_back(elements_.size());
    }
    if (offsets_[1] != 1) throw InternalConsistencyError(algebra_.id() + " is not connected");

    coproduct_.resize(elements_.size());
    antipode_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto& t : algebra_.coproduct(elements_[i]))
        coproduct_[i].push_back({t.coeff, index_of(t.left), index_of(t.right)});
      for (const auto& [b, c] : algebra_.antipode(elements_[i])) antipode_[i].push_back({c, index_of(b)});
    }
  }

  static std::shared_ptr<const HopfStructure> make(Algebra algebra, std::size_t truncation) {
    return std::make_shared<const HopfStructure>(std::move(algebra), truncation);
  }

  const Algebra& algebra() const { return algebra_; }
  std::string id() const { return algebra_.id(); }
  std::size_t truncation() const { return truncation_; }
  std::size_t size() const { return elements_.size(); }

  bool compatible(const HopfStructure& o) const {
    return this == &o || (algebra_ == o.algebra_ && truncation_ == o.truncation_);
  }

  const basis_type& element(index_type i) const { return elements_[i]; }
  std::size_t degree(index_type i) const { return degrees_[i]; }
  std::string format(index_type i) const { return algebra_.format(elements_[i]); }

  /// Flat index range [first, last) of the degree-n basis.
  std::pair<index_type, index_type> degree_range(std::size_t n) const {
    if (n > truncation_) return {static_cast<index_type>(size()), static_cast<index_type>(size())};
    return {static_cast<index_type>(offsets_[n]), static_cast<index_type>(offsets_[n + 1])};
  }
  std::size_t dimension(std::size_t n) const {
    auto [a, b] = degree_range(n);
    return b - a;
  }

  std::optional<index_type> find(const basis_type& b) const {
    auto it = lookup_.find(algebra_.format(b));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  index_type index_of(const basis_type& b) const {
    if (algebra_.degree(b) > truncation_)
      throw TruncationOverflow(algebra_.format(b) + " has degree above truncation " + std::to_string(truncation_));
    auto i = find(b);
    if (!i) throw InternalConsistencyError("basis element " + algebra_.format(b) + " missing from " + id());
    return *i;
  }

  /// Parses a basis element and locates it; degree > N is an overflow.
  index_type parse_index(std::string_view text) const { return index_of(algebra_.parse(text)); }

  const std::vector<Term>& coproduct(index_type i) const { return coproduct_[i]; }
  const std::vector<Summand>& antipode(index_type i) const { return antipode_[i]; }
  std::int64_t counit(index_type i) const { return i == 0 ? 1 : 0; }

  /// Index of b1*b2, or nullopt when its degree exceeds N.
  std::optional<index_type> try_product(index_type a, index_type b) const {
    if (degrees_[a] + degrees_[b] > truncation_) return std::nullopt;
    if (a == 0) return b;
    if (b == 0) return a;
    return index_of(algebra_.multiply(elements_[a], elements_[b]));
  }

  index_type product(index_type a, index_type b) const {
    auto r = try_product(a, b);
    if (!r)
      throw TruncationOverflow("product " + format(a) + " * " + format(b) + " exceeds truncation " +
                               std::to_string(truncation_));
    return *r;
  }

  /// Basis-level product as a graded vector (one term, coefficient 1).
  GradedVector<basis_type, std::int64_t> algebra_product(const basis_type& a, const basis_type& b) const {
    if (algebra_.degree(a) + algebra_.degree(b) > truncation_)
      throw TruncationOverflow("product " + algebra_.format(a) + " * " + algebra_.format(b) +
                               " exceeds truncation " + std::to_string(truncation_));
    GradedVector<basis_type, std::int64_t> v(truncation_);
    v.add(algebra_.multiply(a, b), 1);
    return v;
  }

 private:
  Algebra algebra_;
  std::size_t truncation_;
  std::vector<basis_type> elements_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::string, index_type> lookup_;
  std::vector<std::vector<Term>> coproduct_;
  std::vector<std::vector<Summand>> antipode_;
};

using CKStructure = HopfStructure<ConnesKreimerAlgebra>;
using TensorStructure = HopfStructure<TensorAlgebra>;

inline std::shared_ptr<const CKStructure> make_ck(std::size_t truncation) {
  return CKStructure::make(ConnesKreimerAlgebra{}, truncation);
}

inline std::shared_ptr<const TensorStructure> make_tensor(std::size_t dim, std::size_t truncation) {
  return TensorStructure::make(TensorAlgebra(dim), truncation);
}

}  // namespace hopfchar

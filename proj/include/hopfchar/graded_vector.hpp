#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "hopfchar/errors.hpp"

namespace hopfchar {

/// Finitely supported linear combination of basis elements. Zero
/// coefficients are never stored. `Basis` must provide degree() and be
/// totally ordered; `Coeff` needs +, * and comparison with 0.
template <class Basis, class Coeff>
class GradedVector {
 public:
  using map_type = std::map<Basis, Coeff>;

  GradedVector() = default;
  explicit GradedVector(std::size_t truncation) : truncation_(truncation) {}

  static GradedVector single(const Basis& b, Coeff c = Coeff(1)) {
    GradedVector v;
    v.add(b, std::move(c));
    return v;
  }

  std::size_t truncation() const { return truncation_; }

  void add(const Basis& b, const Coeff& c) {
    if (b.degree() > truncation_)
      throw TruncationOverflow("basis element " + b.str() + " exceeds truncation " + std::to_string(truncation_));
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Degree if every term shares one degree, otherwise -1; empty vectors
  /// count as homogeneous of degree 0.
  long homogeneous_degree() const {
    long d = -2;
    for (const auto& [b, c] : terms_) {
      long bd = static_cast<long>(b.degree());
      if (d == -2) d = bd;
      else if (d != bd) return -1;
    }
    return d == -2 ? 0 : d;
  }

  GradedVector& operator+=(const GradedVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator*(const Coeff& s, const GradedVector& v) {
    GradedVector out(v.truncation_);
    for (const auto& [b, c] : v.terms_) out.add(b, s * c);
    return out;
  }
  friend bool operator==(const GradedVector& a, const GradedVector& b) { return a.terms_ == b.terms_; }

  /// Bilinear extension of a basis-level product `mul(b1, b2) -> Basis`.
  template <class Mul>
  GradedVector multiply(const GradedVector& o, Mul&& mul) const {
    GradedVector out(std::min(truncation_, o.truncation_));
    for (const auto& [b1, c1] : terms_)
      for (const auto& [b2, c2] : o.terms_) out.add(mul(b1, b2), c1 * c2);
    return out;
  }

 private:
  map_type terms_;
  std::size_t truncation_ = std::numeric_limits<std::size_t>::max();
};

/// One summand c * (left (x) right) of a coproduct.
template <class Basis>
struct CoproductTerm {
  std::int64_t coeff;
  Basis left;
  Basis right;

  friend bool operator==(const CoproductTerm&, const CoproductTerm&) = default;
};

/// Adds equal (left, right) pairs together and drops zeros.
template <class Basis>
std::vector<CoproductTerm<Basis>> combine_terms(const std::vector<CoproductTerm<Basis>>& raw) {
  std::map<std::pair<Basis, Basis>, std::int64_t> acc;
  for (const auto& t : raw) acc[{t.left, t.right}] += t.coeff;
  std::vector<CoproductTerm<Basis>> out;
  for (auto& [k, c] : acc)
    if (c != 0) out.push_back({c, k.first, k.second});
  return out;
}

}  // namespace hopfchar

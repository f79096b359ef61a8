#pragma once

// The Connes-Kreimer Hopf algebra of rooted trees: the polynomial algebra on
// trees, graded by number of nodes, with
//   Delta(t) = sum over ordered subtrees s of (t \ s) (x) s_t
//   S(t)     = sum over edge subsets p of (-1)^{|p_t|} (t \ p)
// both extended multiplicatively to forests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopfchar/graded_vector.hpp"
#include "hopfchar/rooted_trees.hpp"

namespace hopfchar {

using ForestVector = GradedVector<Forest, std::int64_t>;

inline std::vector<CoproductTerm<Forest>> tree_coproduct(const RootedTree& t) {
  std::vector<CoproductTerm<Forest>> raw;
  for (const auto& cut : *ordered_subtrees(t)) raw.push_back({1, cut.cut, cut.kept});
  return combine_terms(raw);
}

/// Coproduct of a forest; the empty forest gives 1 (x) 1.
inline std::vector<CoproductTerm<Forest>> ck_coproduct(const Forest& f) {
  std::vector<CoproductTerm<Forest>> acc{{1, Forest(), Forest()}};
  for (const auto& t : f.trees()) {
    std::vector<CoproductTerm<Forest>> next;
    for (const auto& cut : *ordered_subtrees(t))
      for (const auto& a : acc) next.push_back({a.coeff, a.left * cut.cut, a.right * cut.kept});
    acc = combine_terms(next);
  }
  return acc;
}

inline ForestVector tree_antipode(const RootedTree& t) {
  ForestVector out;
  for (const auto& p : *edge_partitions(t)) out.add(p.cut, p.skeleton.order() % 2 ? -1 : 1);
  return out;
}

/// Antipode of a forest: product of the antipodes of its trees.
inline ForestVector ck_antipode(const Forest& f) {
  ForestVector acc = ForestVector::single(Forest());
  for (const auto& t : f.trees())
    acc = acc.multiply(tree_antipode(t), [](const Forest& a, const Forest& b) { return a * b; });
  return acc;
}

inline std::int64_t ck_counit(const Forest& f) { return f.empty() ? 1 : 0; }

/// Policy describing H_CK for HopfStructure.
struct ConnesKreimerAlgebra {
  using basis_type = Forest;

  std::string id() const { return "ck"; }
  bool is_commutative() const { return true; }
  Forest unit() const { return Forest(); }
  std::size_t degree(const Forest& f) const { return f.degree(); }

  /// Basis of each degree 0..n (forests, ascending serialization order).
  std::vector<std::vector<Forest>> basis_up_to(std::size_t n) const {
    std::vector<std::vector<Forest>> out{{Forest()}};
    if (n == 0) return out;
    std::vector<RootedTree> trees;
    for (auto& level : enumerate_trees(n)) trees.insert(trees.end(), level.begin(), level.end());
    for (std::size_t d = 1; d <= n; ++d) out.push_back(forests_of_degree(d, trees));
    return out;
  }

  Forest multiply(const Forest& a, const Forest& b) const { return a * b; }
  std::vector<CoproductTerm<Forest>> coproduct(const Forest& f) const { return ck_coproduct(f); }
  ForestVector antipode(const Forest& f) const { return ck_antipode(f); }
  std::int64_t counit(const Forest& f) const { return ck_counit(f); }
  std::string format(const Forest& f) const { return f.str(); }
  Forest parse(std::string_view text) const { return parse_forest(text); }

  friend bool operator==(const ConnesKreimerAlgebra&, const ConnesKreimerAlgebra&) { return true; }
};

}  // namespace hopfchar

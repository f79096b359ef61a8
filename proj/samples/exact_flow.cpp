// The exact flow of y' = f(y) has B-series coefficients 1/t! (tree
// factorial). It is exp of the infinitesimal character that is 1 on the
// single vertex, it is symplectic, and explicit Euler is not.

#include <iostream>

#include "hopfchar/hopfchar.hpp"

using namespace hopfchar;

namespace {

Integer tree_factorial(const RootedTree& t) {
  Integer f = static_cast<long>(t.order());
  for (const auto& c : t.children()) f *= tree_factorial(c);
  return f;
}

}  // namespace

int main() {
  constexpr std::size_t N = 6;
  auto hopf = make_ck(N);
  RationalField q;

  InfinitesimalCharacter<ConnesKreimerAlgebra, RationalField> dot(indicator(hopf, q, "[]"));
  auto flow = tree_values(char_exp(dot));

  bool all_match = true;
  for (const auto& level : enumerate_trees(N)) {
    for (const auto& t : level) {
      const Rational expected(Integer(1), tree_factorial(t));
      all_match = all_match && flow(t) == expected;
      std::cout << t.str() << "  " << to_string(flow(t)) << "\n";
    }
  }
  std::cout << "matches 1/t!: " << (all_match ? "yes" : "no") << "\n";

  TreeMap<RationalField> euler(q, N);
  euler.set(parse_tree("[]"), 1);
  std::cout << "exact flow symplectic: " << (is_symplectic(flow) ? "yes" : "no") << "\n";
  auto check = is_symplectic(euler);
  std::cout << "explicit Euler symplectic: " << (check ? "yes" : "no");
  if (check.witness) std::cout << " (fails at " << check.witness->first.str() << ", " << check.witness->second.str() << ")";
  std::cout << "\n";

  auto back = butcher_compose(flow, butcher_inverse(flow));
  std::cout << "flow composed with its inverse is the identity: " << (back.values.empty() ? "yes" : "no") << "\n";
  return all_match ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion, with the number of
// individual checks and the wall time against its budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hopfchar/hopfchar.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"
#include "support/symplectic.hpp"

using namespace hopfchar;
using namespace hopfchar::testing;

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Tally&)> body;
};

using CKQ = TruncatedFunctional<ConnesKreimerAlgebra, RationalField>;

FormalSeries random_series(Gen& g, std::size_t len) {
  std::vector<Rational> c(len);
  for (auto& x : c) x = random_rational(g);
  return FormalSeries(std::move(c));
}

template <HopfAlgebra Algebra>
void hopf_axioms(Tally& t, const Algebra& alg, std::size_t max_degree) {
  using V = GradedVector<typename Algebra::basis_type, std::int64_t>;
  for (const auto& level : alg.basis_up_to(max_degree)) {
    for (const auto& b : level) {
      const auto name = alg.id() + " " + alg.format(b);
      t.expect(coassoc_left(alg, b) == coassoc_right(alg, b), "coassociativity at " + name);
      t.expect(counit_left(alg, b) == V::single(b), "left counit at " + name);
      t.expect(counit_right(alg, b) == V::single(b), "right counit at " + name);
      V u_eps;
      u_eps.add(alg.unit(), alg.counit(b));
      t.expect(antipode_convolution(alg, b, true) == u_eps, "m(S x id)Delta at " + name);
      t.expect(antipode_convolution(alg, b, false) == u_eps, "m(id x S)Delta at " + name);
    }
  }
}

// 3 -------------------------------------------------------------------------

template <HopfAlgebra Algebra, CoefficientRing Ring>
void convolution_laws(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf, const Ring& ring,
                      int cases) {
  const auto one = conv_unit(hopf, ring);
  const auto tag = hopf->id() + "/" + ring.id();
  for (int i = 0; i < cases; ++i) {
    auto a = random_functional(g, hopf, ring), b = random_functional(g, hopf, ring), c = random_functional(g, hopf, ring);
    t.expect(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)), "associativity " + tag);
    t.expect(convolve(a, one) == a && convolve(one, a) == a, "unit " + tag);
    auto u = random_invertible(g, hopf, ring);
    auto inv = conv_inverse(u);
    t.expect(convolve(u, inv) == one && convolve(inv, u) == one, "inverse " + tag);
    // a0^{-1} sum_k (-a0^{-1} b)^k by repeated multiplication
    const auto inv0 = ring.inverse(u[0]);
    auto x = u.scaled(-inv0);
    x[0] = ring.zero();
    auto power = one, sum = one;
    for (std::size_t k = 1; k <= hopf->truncation(); ++k) {
      power = convolve(power, x);
      sum += power;
    }
    t.expect(inv == sum.scaled(inv0), "geometric series path " + tag);
  }
}

// 4 -------------------------------------------------------------------------

template <HopfAlgebra Algebra, CoefficientRing Ring>
void morphism_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf, const Ring& ring) {
  auto f = random_series(g, hopf->truncation() + 1), h = random_series(g, hopf->truncation() + 1);
  auto a = random_ideal_element(g, hopf, ring);
  t.expect(apply_series(f * h, a) == convolve(apply_series(f, a), apply_series(h, a)),
           "morphism law " + hopf->id() + "/" + ring.id());
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
void exp_log_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf, const Ring& ring) {
  auto a = random_ideal_element(g, hopf, ring);
  t.expect(log(exp(a)) == a, "log(exp a) = a " + hopf->id() + "/" + ring.id());
  auto u = random_unipotent(g, hopf, ring);
  t.expect(exp(log(u)) == u, "exp(log u) = u " + hopf->id() + "/" + ring.id());
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
void horner_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf, const Ring& ring) {
  auto f = random_series(g, hopf->truncation() + 1);
  auto a = random_ideal_element(g, hopf, ring);
  t.expect(apply_series(f, a) == apply_series_raw(f, a), "Horner vs composition sum " + hopf->id() + "/" + ring.id());
}

// 5 -------------------------------------------------------------------------

template <HopfAlgebra Algebra, CoefficientRing Ring>
void bijection_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf, const Ring& ring) {
  const auto tag = hopf->id() + "/" + ring.id();
  auto x = random_infinitesimal(g, hopf, ring);
  auto e = exp(x.functional());
  t.expect(static_cast<bool>(is_character(e)), "exp(x) is a character " + tag);
  t.expect(char_log(Character<Algebra, Ring>(e)) == x, "log(exp(x)) = x " + tag);
  auto phi = random_character(g, hopf, ring);
  auto l = log(phi.functional());
  t.expect(static_cast<bool>(is_infinitesimal(l)), "log(phi) is infinitesimal " + tag);
  t.expect(char_exp(InfinitesimalCharacter<Algebra, Ring>(l)) == phi, "exp(log(phi)) = phi " + tag);
}

// 6 -------------------------------------------------------------------------

template <HopfAlgebra Algebra, CoefficientRing Ring>
void bracket_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf, const Ring& ring) {
  const auto tag = hopf->id() + "/" + ring.id();
  auto x = random_infinitesimal(g, hopf, ring), y = random_infinitesimal(g, hopf, ring),
       z = random_infinitesimal(g, hopf, ring);
  auto xy = commutator(x.functional(), y.functional());
  t.expect(static_cast<bool>(is_infinitesimal(xy)), "closure " + tag);
  t.expect(xy == -commutator(y.functional(), x.functional()), "antisymmetry " + tag);
  auto jac = commutator(x.functional(), commutator(y.functional(), z.functional())) +
             commutator(y.functional(), commutator(z.functional(), x.functional())) +
             commutator(z.functional(), commutator(x.functional(), y.functional()));
  t.expect(jac.is_zero(), "Jacobi " + tag);
}

template <HopfAlgebra Algebra>
void bch_single_degree_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> hopf) {
  RationalField q;
  std::uniform_int_distribution<std::size_t> deg(1, hopf->truncation() - 1);
  const std::size_t p = deg(g);
  std::uniform_int_distribution<std::size_t> deg2(1, hopf->truncation() - p);
  const std::size_t r = deg2(g);
  auto x = project(random_functional(g, hopf, q, 1.0), p);
  auto y = project(random_functional(g, hopf, q, 1.0), r);
  auto h = bch(x, y) - x - y;
  auto half = commutator(x, y).scaled(Rational(1, 2));
  t.expect(project(h, p + r) == half, "H2 = [x,y]/2 for degrees " + std::to_string(p) + "," + std::to_string(r) +
                                          " on " + hopf->id());
}

void bch_scaling_case(Tally& t, Gen& g, std::shared_ptr<const CKStructure> hopf) {
  // bch(X x, X y) over Q[[X]]/X^3: the X^2 coefficient is H2(x, y).
  SeriesRing s(2);
  RationalField q;
  auto x = random_ideal_element(g, hopf, q), y = random_ideal_element(g, hopf, q);
  TruncatedFunctional<ConnesKreimerAlgebra, SeriesRing> sx(hopf, s), sy(hopf, s);
  for (std::size_t k = 0; k < x.size(); ++k) {
    auto i = static_cast<std::uint32_t>(k);
    sx[i] = s.monomial(1, x[i]);
    sy[i] = s.monomial(1, y[i]);
  }
  auto h = bch(sx, sy);
  auto half = commutator(x, y).scaled(Rational(1, 2));
  bool ok = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    auto i = static_cast<std::uint32_t>(k);
    ok = ok && h[i][1] == x[i] + y[i] && h[i][2] == half[i];
  }
  t.expect(ok, "bilinear part of bch(Xx, Xy)");
}

// 8 -------------------------------------------------------------------------

TreeMap<RationalField> perturbed(Gen& g, TreeMap<RationalField> a) {
  std::vector<RootedTree> trees;
  for (const auto& level : enumerate_trees(a.truncation))
    for (const auto& t : level)
      if (t.order() >= 2) trees.push_back(t);
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  const auto& t = trees[pick(g)];
  a.set(t, a(t) + random_nonzero_rational(g));
  return a;
}

bool vanishes_on_span(const CKQ& phi, const CKStructure& hopf, const HopfIdealSpec<ConnesKreimerAlgebra>& ideal) {
  for (std::size_t n = 1; n <= hopf.truncation(); ++n) {
    auto [first, last] = hopf.degree_range(n);
    for (const auto& row : ideal_span(hopf, ideal, n)) {
      Rational acc = 0;
      for (auto k = first; k < last; ++k) acc += row[k - first] * phi[k];
      if (acc != 0) return false;
    }
  }
  return true;
}

// 9 -------------------------------------------------------------------------

template <CoefficientRing Ring>
FunctionalCurve<ConnesKreimerAlgebra, Ring> random_curve(Gen& g, std::shared_ptr<const CKStructure> hopf,
                                                         const Ring& ring, std::size_t degree) {
  std::vector<TruncatedFunctional<ConnesKreimerAlgebra, Ring>> coeffs;
  for (std::size_t j = 0; j <= degree; ++j) coeffs.push_back(random_infinitesimal(g, hopf, ring).functional());
  return FunctionalCurve<ConnesKreimerAlgebra, Ring>(std::move(coeffs));
}

// 11 ------------------------------------------------------------------------

template <CoefficientRing Ring>
TreeMap<Ring> restrict_map(const TreeMap<Ring>& a, std::size_t n) {
  TreeMap<Ring> out(a.ring, n);
  for (const auto& [t, v] : a.values)
    if (t.order() <= n) out.set(t, v);
  return out;
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
void stability_case(Tally& t, Gen& g, std::shared_ptr<const HopfStructure<Algebra>> big,
                    std::shared_ptr<const HopfStructure<Algebra>> small, const Ring& ring) {
  const auto tag = " " + big->id() + "/" + ring.id();
  auto down = [&](const auto& phi) { return restrict_truncation(phi, small); };
  auto a = random_functional(g, big, ring), b = random_functional(g, big, ring);
  auto u = random_invertible(g, big, ring);
  auto ia = random_ideal_element(g, big, ring), ib = random_ideal_element(g, big, ring);
  auto unip = random_unipotent(g, big, ring);
  auto f = random_series(g, 7);

  t.expect(down(convolve(a, b)) == convolve(down(a), down(b)), "convolve" + tag);
  t.expect(down(conv_inverse(u)) == conv_inverse(down(u)), "conv_inverse" + tag);
  t.expect(down(precompose_antipode(a)) == precompose_antipode(down(a)), "precompose_antipode" + tag);
  t.expect(down(project(a, 3)) == project(down(a), 3), "project" + tag);
  t.expect(down(apply_series(f, ia)) == apply_series(f, down(ia)), "apply_series" + tag);
  t.expect(down(exp(ia)) == exp(down(ia)), "exp" + tag);
  t.expect(down(log(unip)) == log(down(unip)), "log" + tag);
  t.expect(down(bch(ia, ib)) == bch(down(ia), down(ib)), "bch" + tag);

  auto x = random_infinitesimal(g, big, ring), y = random_infinitesimal(g, big, ring);
  auto p = random_character(g, big, ring), r = random_character(g, big, ring);
  using C = Character<Algebra, Ring>;
  using I = InfinitesimalCharacter<Algebra, Ring>;
  const C ps(down(p.functional())), rs(down(r.functional()));
  const I xs(down(x.functional())), ys(down(y.functional()));
  t.expect(down(char_mul(p, r).functional()) == char_mul(ps, rs).functional(), "char_mul" + tag);
  t.expect(down(char_inv(p).functional()) == char_inv(ps).functional(), "char_inv" + tag);
  t.expect(down(char_exp(x).functional()) == char_exp(xs).functional(), "char_exp" + tag);
  t.expect(down(char_log(p).functional()) == char_log(ps).functional(), "char_log" + tag);
  t.expect(down(lie_bracket(x, y).functional()) == lie_bracket(xs, ys).functional(), "lie_bracket" + tag);
  t.expect(static_cast<bool>(is_character(ps.functional())) && static_cast<bool>(is_infinitesimal(xs.functional())),
           "membership predicates" + tag);

  FunctionalCurve<Algebra, Ring> gamma({x.functional(), y.functional()});
  FunctionalCurve<Algebra, Ring> gamma_s({xs.functional(), ys.functional()});
  t.expect(down(evolve(gamma, Rational(1, 2))) == evolve(gamma_s, Rational(1, 2)), "evolve" + tag);
  t.expect(down(evol(gamma).functional()) == evol(gamma_s).functional(), "evol" + tag);

  if constexpr (std::is_same_v<Algebra, ConnesKreimerAlgebra>) {
    auto ta = random_tree_map(g, big->truncation(), ring), tb = random_tree_map(g, big->truncation(), ring);
    const auto n = small->truncation();
    t.expect(restrict_map(butcher_compose(ta, tb), n) == butcher_compose(restrict_map(ta, n), restrict_map(tb, n)),
             "butcher_compose" + tag);
    t.expect(restrict_map(butcher_inverse(ta), n) == butcher_inverse(restrict_map(ta, n)), "butcher_inverse" + tag);
    t.expect(down(char_from_tree_values(big, ta).functional()) ==
                 char_from_tree_values(small, restrict_map(ta, n)).functional(),
             "char_from_tree_values" + tag);
    t.expect(restrict_map(tree_values(p), n) == tree_values(ps), "tree_values" + tag);
  } else {
    auto v = tensor_char_group_iso(p);
    t.expect(tensor_char_group_iso(ps) == v, "tensor_char_group_iso" + tag);
    t.expect(down(tensor_char_from_vector(big, ring, v).functional()) ==
                 tensor_char_from_vector(small, ring, v).functional(),
             "tensor_char_from_vector" + tag);
  }
}

void symplectic_stability_case(Tally& t, Gen& g, std::shared_ptr<const CKStructure> big,
                               std::shared_ptr<const CKStructure> small) {
  auto a = (g() % 2) ? random_symplectic_tree_map(g, big->truncation())
                     : random_tree_map(g, big->truncation(), RationalField{});
  auto low = restrict_map(a, small->truncation());
  const auto big_ideal = symplectic_generators(big->truncation());
  const auto small_ideal = symplectic_generators(small->truncation());
  // Generators of degree <= 4 are the same in both lists.
  bool big_low_degree = true;
  auto phi = char_from_tree_values(big, a);
  for (std::size_t i = 0; i < big_ideal.generators().size(); ++i)
    if (big_ideal.degree(i) <= small->truncation())
      big_low_degree = big_low_degree && evaluate(phi.functional(), big_ideal.generators()[i]) == 0;
  t.expect(static_cast<bool>(annihilates(char_from_tree_values(small, low), small_ideal)) == big_low_degree,
           "annihilates at N=4 vs degree <= 4 generators at N=6");
  t.expect(static_cast<bool>(is_symplectic(low)) == big_low_degree, "is_symplectic at N=4");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hopf axioms on every basis element of degree <= 5, ck and tensor(2)", 60,
       [](Tally& t) {
         hopf_axioms(t, ConnesKreimerAlgebra{}, 5);
         hopf_axioms(t, TensorAlgebra(2), 5);
       }},
      {2, "tree counts for orders 1..8 equal the brute-force dedup oracle", 30,
       [](Tally& t) {
         const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115};
         auto trees = enumerate_trees(8);
         auto oracle = brute_force_tree_codes(8);
         for (std::size_t n = 1; n <= 8; ++n) {
           std::set<std::string> ours;
           for (const auto& tr : trees[n - 1]) ours.insert(ahu_code(parents_of(tr)));
           t.expect(trees[n - 1].size() == oracle[n - 1].size(), "count at order " + std::to_string(n));
           t.expect(ours == oracle[n - 1], "tree set at order " + std::to_string(n));
           t.expect(trees[n - 1].size() == expected[n - 1], "sequence value at order " + std::to_string(n));
         }
       }},
      {3, "convolution associativity, unit and inverse on 100 random triples at N=6 over both rings", 60,
       [](Tally& t) {
         Gen g(3);
         convolution_laws(t, g, make_ck(6), RationalField{}, 100);
         convolution_laws(t, g, make_ck(6), SeriesRing(2), 100);
       }},
      {4, "functional calculus: morphism law (100), exp/log roundtrips (100), Horner = composition sum (25)", 120,
       [](Tally& t) {
         Gen g(4);
         auto ck = make_ck(6);
         auto tensor = make_tensor(2, 6);
         for (int i = 0; i < 100; ++i) {
           if (i % 4 == 3) morphism_case(t, g, tensor, RationalField{});
           else if (i % 4 == 2) morphism_case(t, g, ck, SeriesRing(2));
           else morphism_case(t, g, ck, RationalField{});
         }
         for (int i = 0; i < 100; ++i) {
           if (i % 4 == 3) exp_log_case(t, g, tensor, RationalField{});
           else if (i % 4 == 2) exp_log_case(t, g, ck, SeriesRing(2));
           else exp_log_case(t, g, ck, RationalField{});
         }
         for (int i = 0; i < 25; ++i) {
           if (i % 5 == 4) horner_case(t, g, tensor, RationalField{});
           else horner_case(t, g, ck, RationalField{});
         }
       }},
      {5, "char_exp of 100 random infinitesimal characters passes is_character and char_log inverts it", 60,
       [](Tally& t) {
         Gen g(5);
         auto ck = make_ck(6);
         auto tensor = make_tensor(2, 6);
         for (int i = 0; i < 100; ++i) {
           if (i % 4 == 3) bijection_case(t, g, tensor, RationalField{});
           else if (i % 4 == 2) bijection_case(t, g, ck, SeriesRing(2));
           else bijection_case(t, g, ck, RationalField{});
         }
       }},
      {6, "bracket closure, antisymmetry and Jacobi at N=5 (50 triples); BCH degree-2 term is [x,y]/2", 60,
       [](Tally& t) {
         Gen g(6);
         auto ck = make_ck(5);
         auto tensor = make_tensor(2, 5);
         for (int i = 0; i < 50; ++i) {
           if (i % 2) bracket_case(t, g, tensor, RationalField{});
           else bracket_case(t, g, ck, RationalField{});
         }
         RationalField q;
         auto x = indicator(ck, q, "[]"), y = indicator(ck, q, "[[]]");
         t.expect(project(bch(x, y) - x - y, 3) == commutator(x, y).scaled(Rational(1, 2)),
                  "H2 for x = delta_dot, y = delta_chain");
         for (int i = 0; i < 20; ++i) bch_single_degree_case(t, g, ck);
         for (int i = 0; i < 10; ++i) bch_single_degree_case(t, g, tensor);
         for (int i = 0; i < 10; ++i) bch_scaling_case(t, g, ck);
       }},
      {7, "butcher_compose equals the character product on 100 random pairs at N=6; char_inv = Butcher inverse", 60,
       [](Tally& t) {
         Gen g(7);
         auto ck = make_ck(6);
         auto run = [&](const auto& ring) {
           auto a = random_tree_map(g, 6, ring), b = random_tree_map(g, 6, ring);
           auto prod = char_mul(char_from_tree_values(ck, a), char_from_tree_values(ck, b));
           t.expect(butcher_compose(a, b) == tree_values(prod), "composition law over " + ring.id());
           t.expect(butcher_inverse(a) == tree_values(char_inv(char_from_tree_values(ck, a))),
                    "inverse over " + ring.id());
         };
         for (int i = 0; i < 100; ++i) {
           if (i % 4 == 3) run(SeriesRing(2));
           else run(RationalField{});
         }
       }},
      {8, "symplectic subgroup closure at N=6 (50), is_symplectic = annihilates (200), span oracle at degree <= 4",
       120,
       [](Tally& t) {
         Gen g(8);
         auto ck = make_ck(6);
         auto ideal = symplectic_generators(6);
         for (int i = 0; i < 50; ++i) {
           auto a = char_from_tree_values(ck, random_symplectic_tree_map(g, 6));
           auto b = char_from_tree_values(ck, random_symplectic_tree_map(g, 6));
           t.expect(static_cast<bool>(annihilates(a, ideal)) && static_cast<bool>(annihilates(b, ideal)),
                    "generated elements annihilate");
           t.expect(static_cast<bool>(annihilates(char_mul(a, b), ideal)), "closed under mul");
           t.expect(static_cast<bool>(annihilates(char_inv(a), ideal)), "closed under inv");
           t.expect(static_cast<bool>(annihilates(char_log(a), ideal)), "log lands in the Lie algebra");
           auto x = random_hamiltonian(g, ck), y = random_hamiltonian(g, ck);
           t.expect(static_cast<bool>(annihilates(x, ideal)) && static_cast<bool>(annihilates(y, ideal)),
                    "generated Lie elements annihilate");
           t.expect(static_cast<bool>(annihilates(lie_bracket(x, y), ideal)), "closed under bracket");
           t.expect(static_cast<bool>(annihilates(char_exp(x), ideal)), "exp lands in the subgroup");
         }
         int positives = 0;
         for (int i = 0; i < 200; ++i) {
           TreeMap<RationalField> a(RationalField{}, 6);
           if (i % 3 == 0) a = random_tree_map(g, 6, RationalField{});
           else if (i % 3 == 1) a = random_symplectic_tree_map(g, 6);
           else a = perturbed(g, random_symplectic_tree_map(g, 6));
           const bool by_map = static_cast<bool>(is_symplectic(a));
           positives += by_map;
           t.expect(by_map == static_cast<bool>(annihilates(char_from_tree_values(ck, a), ideal)),
                    "is_symplectic vs annihilates");
         }
         t.expect(positives >= 60 && positives <= 140, "both outcomes exercised");
         auto small = make_ck(4);
         auto small_ideal = symplectic_generators(4);
         for (int i = 0; i < 40; ++i) {
           auto a = (i % 2) ? random_symplectic_tree_map(g, 4) : random_tree_map(g, 4, RationalField{});
           auto phi = char_from_tree_values(small, a);
           t.expect(vanishes_on_span(phi.functional(), *small, small_ideal) ==
                        static_cast<bool>(annihilates(phi, small_ideal)),
                    "character: generators vs full span");
           auto x = (i % 2) ? random_hamiltonian(g, small) : random_infinitesimal(g, small, RationalField{});
           t.expect(vanishes_on_span(x.functional(), *small, small_ideal) ==
                        static_cast<bool>(annihilates(x, small_ideal)),
                    "infinitesimal: generators vs full span");
         }
       }},
      {9, "evolution of 50 random curves (degree <= 2) at N=5: character, exact ODE, constant curve = char_exp", 180,
       [](Tally& t) {
         Gen g(9);
         auto ck = make_ck(5);
         RationalField q;
         const std::vector<Rational> times{Rational(1, 3), Rational(1, 2), Rational(1)};
         for (int i = 0; i < 50; ++i) {
           auto gamma = random_curve(g, ck, q, static_cast<std::size_t>(i % 3));
           auto eta = evolution_polynomial(gamma);
           for (const auto& s : times) t.expect(static_cast<bool>(is_character(evolve(gamma, s))), "character at t");
           // eta' = eta * gamma as polynomials in t, coefficient by coefficient
           const auto& e = eta.coefficients();
           const auto& c = gamma.coefficients();
           bool ode = eta.at(Rational(0)) == conv_unit(ck, q);
           for (std::size_t k = 0; k + 1 < e.size() + c.size(); ++k) {
             CKQ lhs(ck, q), rhs(ck, q);
             if (k + 1 < e.size()) lhs = e[k + 1].scaled(Rational(static_cast<long>(k + 1)));
             for (std::size_t j = 0; j < c.size() && j <= k; ++j)
               if (k - j < e.size()) rhs += convolve(e[k - j], c[j]);
             ode = ode && lhs == rhs;
           }
           t.expect(ode, "polynomial ODE identity");
           auto d = eta.derivative();
           for (const auto& s : times) t.expect(d.at(s) == convolve(eta.at(s), gamma.at(s)), "ODE at t");
           auto x = random_infinitesimal(g, ck, q);
           auto constant = FunctionalCurve<ConnesKreimerAlgebra, RationalField>::constant(x);
           for (const auto& s : times)
             t.expect(evolve(constant, s) == char_exp(InfinitesimalCharacter<ConnesKreimerAlgebra, RationalField>(
                                                 x.functional().scaled(s)))
                                                 .functional(),
                      "constant curve = char_exp(t x)");
         }
       }},
      {10, "Char(T(V)) -> (V*, +) is a group isomorphism on 100 random pairs for d = 2, 3", 30,
       [](Tally& t) {
         Gen g(10);
         RationalField q;
         for (std::size_t d : {2u, 3u}) {
           auto hopf = make_tensor(d, 5);
           const auto zero = std::vector<Rational>(d);
           t.expect(tensor_char_group_iso(char_unit(hopf, q)) == zero, "unit maps to 0");
           for (int i = 0; i < 100; ++i) {
             auto a = random_character(g, hopf, q), b = random_character(g, hopf, q);
             auto va = tensor_char_group_iso(a), vb = tensor_char_group_iso(b);
             auto vab = tensor_char_group_iso(char_mul(a, b));
             bool hom = true, inv = true;
             auto vinv = tensor_char_group_iso(char_inv(a));
             for (std::size_t k = 0; k < d; ++k) {
               hom = hom && vab[k] == va[k] + vb[k];
               inv = inv && vinv[k] == -va[k];
             }
             t.expect(hom, "homomorphism d=" + std::to_string(d));
             t.expect(inv, "inverse to negation d=" + std::to_string(d));
             t.expect(tensor_char_from_vector(hopf, q, va) == a, "injective d=" + std::to_string(d));
             std::vector<Rational> v(d);
             for (auto& x : v) x = random_rational(g);
             auto phi = tensor_char_from_vector(hopf, q, v);
             t.expect(static_cast<bool>(is_character(phi.functional())) && tensor_char_group_iso(phi) == v,
                      "surjective d=" + std::to_string(d));
           }
         }
       }},
      {11, "truncation stability: degree <= 4 outputs at N=4 equal those at N=6 for every operation (50 inputs)", 60,
       [](Tally& t) {
         Gen g(11);
         auto ck6 = make_ck(6), ck4 = make_ck(4);
         auto t6 = make_tensor(2, 6), t4 = make_tensor(2, 4);
         for (int i = 0; i < 50; ++i) {
           if (i % 5 == 4) stability_case(t, g, t6, t4, RationalField{});
           else if (i % 5 == 3) stability_case(t, g, ck6, ck4, SeriesRing(2));
           else stability_case(t, g, ck6, ck4, RationalField{});
           symplectic_stability_case(t, g, ck6, ck4);
         }
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Tally tally;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && tally.failed() == 0 && tally.checks() > 0 && secs < c.budget_s;
    failures += !ok;
    std::printf("%s  criterion %2d: %s [%zu checks, %.2f s / %.0f s budget]\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), tally.checks(), secs, c.budget_s);
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    if (tally.failed()) std::printf("      %zu failed checks, e.g.:\n", tally.failed());
    for (const auto& n : tally.notes()) std::printf("        %s\n", n.c_str());
    if (secs >= c.budget_s) std::printf("      over time budget\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

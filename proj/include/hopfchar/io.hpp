#pragma once

// JSON persistence. Ring values are strings: "p/q" for rationals and
// "c0,c1,..." for truncated series. Omitted basis keys mean zero; emitted
// objects list nonzero values only, in basis order.
//
//   functional: {"hopf":"ck","ring":"rational","truncation":6,"values":{"[]":"1"}}
//   tree map:   {"truncation":6,"trees":{"[]":"1","[[]]":"1/2"}}
//   ideal:      {"hopf":"ck","generators":[{"[[]]":"2","[] []":"-1"}]}
//   curve:      {"coeffs":[<functional>, ...]}

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfchar/characters.hpp"
#include "hopfchar/evolution.hpp"
#include "hopfchar/ideals.hpp"

namespace hopfchar {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string require_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

inline std::size_t require_size(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

template <class Basis, class Coeff>
json graded_vector_to_json(const GradedVector<Basis, Coeff>& v) {
  json out = json::object();
  for (const auto& [b, c] : v) {
    if constexpr (std::is_same_v<Coeff, Rational>) out[b.str()] = to_string(c);
    else out[b.str()] = std::to_string(c);
  }
  return out;
}

template <HopfAlgebra Algebra>
GradedVector<typename Algebra::basis_type, Rational> graded_vector_from_json(const Algebra& alg, const json& j) {
  if (!j.is_object()) throw ParseError("graded vector must be a JSON object");
  GradedVector<typename Algebra::basis_type, Rational> v;
  for (const auto& [key, value] : j.items()) v.add(alg.parse(key), parse_rational(detail::require_string(value, key)));
  return v;
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
json functional_to_json(const TruncatedFunctional<Algebra, Ring>& phi) {
  json values = json::object();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    auto idx = static_cast<typename HopfStructure<Algebra>::index_type>(i);
    if (!phi.ring().is_zero(phi[idx])) values[phi.hopf().format(idx)] = phi.ring().format(phi[idx]);
  }
  return json{{"hopf", phi.hopf().id()}, {"ring", phi.ring().id()}, {"truncation", phi.truncation()}, {"values", values}};
}

/// Reads a functional and checks that its hopf/ring/truncation match.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> functional_from_json(const json& j, std::shared_ptr<const HopfStructure<Algebra>> hopf,
                                                        const Ring& ring) {
  const auto hopf_id = detail::require_string(detail::require_field(j, "hopf"), "hopf");
  const auto ring_id = detail::require_string(detail::require_field(j, "ring"), "ring");
  const auto n = detail::require_size(detail::require_field(j, "truncation"), "truncation");
  if (hopf_id != hopf->id() || ring_id != ring.id() || n != hopf->truncation())
    throw IncompatibleError("functional over " + hopf_id + "/" + ring_id + "/N=" + std::to_string(n) +
                            ", expected " + hopf->id() + "/" + ring.id() + "/N=" + std::to_string(hopf->truncation()));
  TruncatedFunctional<Algebra, Ring> phi(hopf, ring);
  const auto& values = detail::require_field(j, "values");
  if (!values.is_object()) throw ParseError("\"values\" must be an object");
  for (const auto& [key, value] : values.items()) phi.set(key, ring.parse(detail::require_string(value, key)));
  return phi;
}

template <CoefficientRing Ring>
json tree_map_to_json(const TreeMap<Ring>& a) {
  json trees = json::object();
  for (const auto& level : enumerate_trees(a.truncation))
    for (const auto& t : level)
      if (auto v = a(t); !a.ring.is_zero(v)) trees[t.str()] = a.ring.format(v);
  return json{{"truncation", a.truncation}, {"trees", trees}};
}

template <CoefficientRing Ring>
TreeMap<Ring> tree_map_from_json(const json& j, const Ring& ring) {
  TreeMap<Ring> a(ring, detail::require_size(detail::require_field(j, "truncation"), "truncation"));
  const auto& trees = detail::require_field(j, "trees");
  if (!trees.is_object()) throw ParseError("\"trees\" must be an object");
  for (const auto& [key, value] : trees.items()) a.set(parse_tree(key), ring.parse(detail::require_string(value, key)));
  return a;
}

template <HopfAlgebra Algebra>
json ideal_to_json(const HopfIdealSpec<Algebra>& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(graded_vector_to_json(g));
  return json{{"hopf", ideal.algebra().id()}, {"generators", gens}};
}

template <HopfAlgebra Algebra>
HopfIdealSpec<Algebra> ideal_from_json(const json& j, const Algebra& alg) {
  const auto hopf_id = detail::require_string(detail::require_field(j, "hopf"), "hopf");
  if (hopf_id != alg.id()) throw IncompatibleError("ideal over " + hopf_id + ", expected " + alg.id());
  const auto& gens = detail::require_field(j, "generators");
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array");
  std::vector<GradedVector<typename Algebra::basis_type, Rational>> out;
  for (const auto& g : gens) out.push_back(graded_vector_from_json(alg, g));
  return HopfIdealSpec<Algebra>(alg, std::move(out));
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
json curve_to_json(const FunctionalCurve<Algebra, Ring>& gamma) {
  json coeffs = json::array();
  for (const auto& c : gamma.coefficients()) coeffs.push_back(functional_to_json(c));
  return json{{"coeffs", coeffs}};
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
FunctionalCurve<Algebra, Ring> curve_from_json(const json& j, std::shared_ptr<const HopfStructure<Algebra>> hopf,
                                               const Ring& ring) {
  const auto& coeffs = detail::require_field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<TruncatedFunctional<Algebra, Ring>> out;
  for (const auto& c : coeffs) out.push_back(functional_from_json(c, hopf, ring));
  return FunctionalCurve<Algebra, Ring>(std::move(out));
}

}  // namespace hopfchar

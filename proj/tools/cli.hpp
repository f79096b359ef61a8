#pragma once

// Command dispatch for the hopfchar tool, kept separate from main() so the
// test suite can drive it with in-memory streams.
//
//   hopfchar trees <max_order>
//   hopfchar structure <element> coproduct|antipode
//   hopfchar char mul|inv|exp|log|evolve|symplectic <file>...
//
// Exit codes: 0 success, 2 domain error (e.g. an input that is not a
// character), 1 usage, I/O, parse or compatibility error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfchar/hopfchar.hpp"

namespace hopfchar::cli {

struct CliConfig {
  std::optional<std::size_t> truncation;
  std::optional<std::string> hopf;
  std::optional<std::string> ring;
  std::string format = "auto";
  std::string out;
};

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.offset());
  }
}

inline bool is_tree_map(const json& j) { return j.is_object() && j.contains("trees"); }

inline std::size_t parse_modulus(const std::string& id) {
  const std::string digits = id.substr(7);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("invalid ring '" + id + "'");
  const auto m = std::stoul(digits);
  if (m < 1) throw ParseError("series modulus must be at least 1");
  return m;
}

template <class F>
int with_ring(const std::string& id, F&& f) {
  if (id == "rational") return f(RationalField{});
  if (id.rfind("series:", 0) == 0) return f(SeriesRing(parse_modulus(id)));
  throw ParseError("unknown ring '" + id + "' (expected rational or series:M)");
}

template <class F>
int with_algebra(const std::string& id, F&& f) {
  if (id == "ck") return f(ConnesKreimerAlgebra{});
  if (id == "tensor") return f(TensorAlgebra(2));
  if (id.rfind("tensor(", 0) == 0 && id.size() > 8 && id.back() == ')') {
    const std::string digits = id.substr(7, id.size() - 8);
    if (digits.find_first_not_of("0123456789") == std::string::npos) return f(TensorAlgebra(std::stoul(digits)));
  }
  throw ParseError("unknown Hopf algebra '" + id + "' (expected ck or tensor(d))");
}

class Output {
 public:
  Output(const CliConfig& cfg, std::ostream& out) : path_(cfg.out), out_(out) {}

  std::ostream& stream() { return path_.empty() ? out_ : buffer_; }

  void flush() {
    if (path_.empty()) return;
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw Error("cannot write " + path_);
    f << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

inline bool want_json(const CliConfig& cfg, bool json_by_default) {
  if (cfg.format == "auto") return json_by_default;
  return cfg.format == "json";
}

inline std::string term_text(std::int64_t coeff, const std::string& basis, bool first) {
  std::string s;
  if (coeff < 0) s = first ? "-" : " - ";
  else if (!first) s = " + ";
  const auto mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) s += std::to_string(mag) + " ";
  return s + basis;
}

// ---------------------------------------------------------------------------
// trees

inline int cmd_trees(const CliConfig& cfg, std::size_t max_order, std::ostream& out) {
  const auto trees = enumerate_trees(max_order);
  Output o(cfg, out);
  if (want_json(cfg, false)) {
    json orders = json::array();
    for (std::size_t n = 1; n <= trees.size(); ++n) {
      json list = json::array();
      for (const auto& t : trees[n - 1]) list.push_back(t.str());
      orders.push_back(json{{"order", n}, {"count", trees[n - 1].size()}, {"trees", list}});
    }
    o.stream() << json{{"orders", orders}}.dump(2) << "\n";
  } else {
    for (std::size_t n = 1; n <= trees.size(); ++n) {
      o.stream() << "order " << n << ": " << trees[n - 1].size() << "\n";
      for (const auto& t : trees[n - 1]) o.stream() << "  " << t.str() << "\n";
    }
  }
  o.flush();
  return 0;
}

// ---------------------------------------------------------------------------
// structure

template <HopfAlgebra Algebra>
int structure_for(const CliConfig& cfg, const Algebra& alg, const std::string& element, const std::string& which,
                  std::ostream& out) {
  const auto b = alg.parse(element);
  Output o(cfg, out);
  const bool as_json = want_json(cfg, false);
  if (which == "coproduct") {
    const auto terms = alg.coproduct(b);
    if (as_json) {
      json list = json::array();
      for (const auto& t : terms)
        list.push_back(json{{"coeff", t.coeff}, {"left", alg.format(t.left)}, {"right", alg.format(t.right)}});
      o.stream() << json{{"element", alg.format(b)}, {"coproduct", list}}.dump(2) << "\n";
    } else {
      for (const auto& t : terms) {
        if (t.coeff != 1) o.stream() << t.coeff << " ";
        o.stream() << alg.format(t.left) << " ⊗ " << alg.format(t.right) << "\n";
      }
    }
  } else {
    const auto s = alg.antipode(b);
    if (as_json) {
      json values = json::object();
      for (const auto& [basis, c] : s) values[alg.format(basis)] = c;
      o.stream() << json{{"element", alg.format(b)}, {"antipode", values}}.dump(2) << "\n";
    } else {
      std::string line;
      for (const auto& [basis, c] : s) line += term_text(c, alg.format(basis), line.empty());
      o.stream() << (line.empty() ? "0" : line) << "\n";
    }
  }
  o.flush();
  return 0;
}

inline int cmd_structure(const CliConfig& cfg, const std::string& element, const std::string& which,
                         std::ostream& out) {
  if (which != "coproduct" && which != "antipode")
    throw ParseError("structure: expected coproduct or antipode, got '" + which + "'");
  return with_algebra(cfg.hopf.value_or("ck"),
                      [&](const auto& alg) { return structure_for(cfg, alg, element, which, out); });
}

// ---------------------------------------------------------------------------
// char

template <HopfAlgebra Algebra, CoefficientRing Ring>
void emit_functional(const CliConfig& cfg, const TruncatedFunctional<Algebra, Ring>& phi, std::ostream& out) {
  Output o(cfg, out);
  if (want_json(cfg, true)) {
    o.stream() << functional_to_json(phi).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < phi.size(); ++i) {
      auto idx = static_cast<typename HopfStructure<Algebra>::index_type>(i);
      if (!phi.ring().is_zero(phi[idx]))
        o.stream() << phi.hopf().format(idx) << ": " << phi.ring().format(phi[idx]) << "\n";
    }
  }
  o.flush();
}

template <CoefficientRing Ring>
void emit_tree_map(const CliConfig& cfg, const TreeMap<Ring>& a, std::ostream& out) {
  Output o(cfg, out);
  if (want_json(cfg, true)) {
    o.stream() << tree_map_to_json(a).dump(2) << "\n";
  } else {
    for (const auto& level : enumerate_trees(a.truncation))
      for (const auto& t : level)
        if (auto v = a(t); !a.ring.is_zero(v)) o.stream() << t.str() << ": " << a.ring.format(v) << "\n";
  }
  o.flush();
}

/// An input file read as a functional; tree maps become the multiplicative
/// (character) or the tree-supported (infinitesimal) extension.
template <HopfAlgebra Algebra, CoefficientRing Ring>
TruncatedFunctional<Algebra, Ring> load_functional(const json& j, std::shared_ptr<const HopfStructure<Algebra>> hopf,
                                                   const Ring& ring, bool infinitesimal) {
  if (!is_tree_map(j)) return functional_from_json(j, hopf, ring);
  if constexpr (std::is_same_v<Algebra, ConnesKreimerAlgebra>) {
    auto a = tree_map_from_json(j, ring);
    if (a.truncation != hopf->truncation())
      throw IncompatibleError("tree map truncation " + std::to_string(a.truncation) + ", expected " +
                              std::to_string(hopf->truncation()));
    if (!infinitesimal) return char_from_tree_values(hopf, a).functional();
    TruncatedFunctional<Algebra, Ring> phi(hopf, ring);
    for (const auto& [t, v] : a.values) phi.set(Forest(t), v);
    return phi;
  } else {
    throw IncompatibleError("tree maps need --hopf ck, got " + hopf->id());
  }
}

template <HopfAlgebra Algebra, CoefficientRing Ring>
int char_for(const CliConfig& cfg, const Algebra& alg, const Ring& ring, std::size_t n, const std::string& op,
             const std::vector<json>& inputs, const Rational& time, std::ostream& out) {
  const auto hopf = HopfStructure<Algebra>::make(alg, n);
  const bool tree_out = is_tree_map(inputs.front());
  auto need = [&](std::size_t k) {
    if (inputs.size() != k)
      throw ParseError("char " + op + " takes " + std::to_string(k) + " input file(s), got " +
                       std::to_string(inputs.size()));
  };
  auto as_character = [&](const json& j) { return Character<Algebra, Ring>(load_functional(j, hopf, ring, false)); };
  auto emit_char = [&](const Character<Algebra, Ring>& c) {
    if constexpr (std::is_same_v<Algebra, ConnesKreimerAlgebra>) {
      if (tree_out) return emit_tree_map(cfg, tree_values(c), out);
    }
    emit_functional(cfg, c.functional(), out);
  };

  if (op == "mul") {
    need(2);
    emit_char(char_mul(as_character(inputs[0]), as_character(inputs[1])));
  } else if (op == "inv") {
    need(1);
    emit_char(char_inv(as_character(inputs[0])));
  } else if (op == "exp") {
    need(1);
    InfinitesimalCharacter<Algebra, Ring> x(load_functional(inputs[0], hopf, ring, true));
    emit_char(char_exp(x));
  } else if (op == "log") {
    need(1);
    auto x = char_log(as_character(inputs[0]));
    if constexpr (std::is_same_v<Algebra, ConnesKreimerAlgebra>) {
      if (tree_out) {
        emit_tree_map(cfg, tree_values(x.functional()), out);
        return 0;
      }
    }
    emit_functional(cfg, x.functional(), out);
  } else if (op == "evolve") {
    need(1);
    auto gamma = curve_from_json(inputs[0], hopf, ring);
    auto eta = evolve(gamma, time);
    if (auto c = is_character(eta); !c)
      throw InternalConsistencyError("evolution left the character group: " + Character<Algebra, Ring>::describe(c));
    emit_functional(cfg, eta, out);
  } else if (op == "symplectic") {
    need(1);
    if constexpr (!std::is_same_v<Algebra, ConnesKreimerAlgebra>) {
      throw IncompatibleError("symplectic check needs --hopf ck");
    } else {
      const auto ideal = symplectic_generators(n);
      json result;
      if (tree_out) {
        auto check = is_symplectic(tree_map_from_json(inputs[0], ring));
        result["symplectic"] = check.holds;
        if (check.witness) result["witness"] = {check.witness->first.str(), check.witness->second.str()};
      } else {
        auto phi = functional_from_json(inputs[0], hopf, ring);
        auto check = annihilates(phi, ideal);
        result["symplectic"] = check.holds;
        if (check.violated_generator) result["witness"] = graded_vector_to_json(ideal.generators()[*check.violated_generator]);
      }
      result["generators"] = ideal.generators().size();
      Output o(cfg, out);
      if (want_json(cfg, true)) {
        o.stream() << result.dump(2) << "\n";
      } else {
        o.stream() << (result["symplectic"].get<bool>() ? "true" : "false") << " (" << ideal.generators().size()
                   << " generators)\n";
        if (result.contains("witness")) o.stream() << "witness: " << result["witness"].dump() << "\n";
      }
      o.flush();
    }
  } else {
    throw ParseError("unknown char operation '" + op + "'");
  }
  return 0;
}

/// The first functional-like object in an input: itself, or a curve's first coefficient.
inline const json* header_of(const json& j) {
  if (j.is_object() && j.contains("coeffs") && j["coeffs"].is_array() && !j["coeffs"].empty()) return &j["coeffs"][0];
  return &j;
}

inline int cmd_char(const CliConfig& cfg, const std::string& op, const std::vector<std::string>& files,
                    const std::string& time_text, std::ostream& out) {
  if (files.empty()) throw ParseError("char " + op + ": no input files");
  std::vector<json> inputs;
  for (const auto& f : files) inputs.push_back(read_json_file(f));

  // Missing flags are taken from the first input.
  const json& head = *header_of(inputs.front());
  std::string hopf_id = cfg.hopf.value_or("ck");
  std::string ring_id = cfg.ring.value_or("rational");
  std::optional<std::size_t> n = cfg.truncation;
  if (head.is_object()) {
    if (!cfg.hopf && head.contains("hopf") && head["hopf"].is_string()) hopf_id = head["hopf"].get<std::string>();
    if (!cfg.ring && head.contains("ring") && head["ring"].is_string()) ring_id = head["ring"].get<std::string>();
    if (!n && head.contains("truncation") && head["truncation"].is_number_unsigned())
      n = head["truncation"].get<std::size_t>();
  }
  const std::size_t truncation = n.value_or(6);
  if (truncation < 1) throw ParseError("truncation must be at least 1");
  const Rational time = parse_rational(time_text);

  return with_algebra(hopf_id, [&](const auto& alg) {
    return with_ring(ring_id, [&](const auto& ring) {
      return char_for(cfg, alg, ring, truncation, op, inputs, time, out);
    });
  });
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters of graded Hopf algebras: rooted trees, Butcher series, exp/log and evolution"};
  app.name("hopfchar");
  app.require_subcommand(1);
  // Options given after the subcommand name are accepted too.
  app.fallthrough();
  CliConfig cfg;
  std::size_t n_flag = 0;
  auto* n_opt = app.add_option("-N,--truncation", n_flag, "truncation degree (default 6)")->check(CLI::PositiveNumber);
  std::string hopf_flag, ring_flag;
  auto* hopf_opt = app.add_option("--hopf", hopf_flag, "ck or tensor(d)");
  auto* ring_opt = app.add_option("--ring", ring_flag, "rational or series:M");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"auto", "text", "json"}));
  app.add_option("--out", cfg.out, "write the result to this file");

  auto* trees = app.add_subcommand("trees", "list rooted trees by order");
  std::size_t max_order = 0;
  trees->add_option("max_order", max_order)->required()->check(CLI::PositiveNumber);

  auto* structure = app.add_subcommand("structure", "coproduct or antipode of a basis element");
  std::string element, which;
  structure->add_option("element", element)->required();
  structure->add_option("which", which)->required()->check(CLI::IsMember({"coproduct", "antipode"}));

  auto* chr = app.add_subcommand("char", "character arithmetic on JSON files");
  std::string op;
  std::vector<std::string> files;
  std::string time_text = "1";
  chr->add_option("op", op)->required()->check(
      CLI::IsMember({"mul", "inv", "exp", "log", "evolve", "symplectic"}));
  chr->add_option("files", files)->required();
  chr->add_option("--time,-t", time_text, "end time for evolve (rational, default 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (n_opt->count()) cfg.truncation = n_flag;
  if (hopf_opt->count()) cfg.hopf = hopf_flag;
  if (ring_opt->count()) cfg.ring = ring_flag;

  try {
    if (*trees) return detail::cmd_trees(cfg, max_order, out);
    if (*structure) return detail::cmd_structure(cfg, element, which, out);
    return detail::cmd_char(cfg, op, files, time_text, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hopfchar::cli

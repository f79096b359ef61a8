#pragma once

// Tensor algebra T(V) on a d-dimensional space V with basis v0..v{d-1}:
// words under concatenation, generators primitive, so the coproduct is the
// unshuffle coproduct and S(w) = (-1)^|w| reverse(w).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopfchar/errors.hpp"
#include "hopfchar/graded_vector.hpp"

namespace hopfchar {

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint16_t> letters) : letters_(std::move(letters)) {}

  const std::vector<std::uint16_t>& letters() const { return letters_; }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// "v0v1v0", or "1" for the empty word.
  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (auto l : letters_) s += "v" + std::to_string(l);
    return s;
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<std::uint16_t> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(l));
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Shorter words first, then lexicographic on letter indices.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<std::uint16_t> letters_;
};

using WordVector = GradedVector<Word, std::int64_t>;

inline Word parse_word(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw ParseError("trailing characters after unit word", i);
    return Word();
  }
  std::vector<std::uint16_t> letters;
  while (i < text.size()) {
    if (text[i] != 'v') throw ParseError("expected 'v'", i);
    ++i;
    std::size_t start = i;
    unsigned long value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + static_cast<unsigned long>(text[i] - '0');
      if (value > 65535) throw ParseError("generator index too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected generator index", i);
    letters.push_back(static_cast<std::uint16_t>(value));
    skip();
  }
  if (letters.empty()) throw ParseError("empty word literal (use \"1\")", i);
  return Word(std::move(letters));
}

/// Unshuffle coproduct: position subsets S go to the left leg, the
/// complement to the right, both keeping letter order.
inline std::vector<CoproductTerm<Word>> tensor_coproduct(const Word& w) {
  const std::size_t n = w.degree();
  if (n > 30) throw ResourceLimitError("word too long for unshuffle enumeration");
  std::vector<CoproductTerm<Word>> raw;
  raw.reserve(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    std::vector<std::uint16_t> left, right;
    for (std::size_t i = 0; i < n; ++i) (s >> i & 1u ? left : right).push_back(w.letters()[i]);
    raw.push_back({1, Word(std::move(left)), Word(std::move(right))});
  }
  return combine_terms(raw);
}

inline WordVector tensor_antipode(const Word& w) {
  std::vector<std::uint16_t> rev(w.letters().rbegin(), w.letters().rend());
  return WordVector::single(Word(std::move(rev)), w.degree() % 2 ? -1 : 1);
}

inline std::int64_t tensor_counit(const Word& w) { return w.empty() ? 1 : 0; }

/// Policy describing T(V), dim V = d, for HopfStructure.
class TensorAlgebra {
 public:
  using basis_type = Word;

  explicit TensorAlgebra(std::size_t dim = 2) : dim_(dim) {
    if (dim == 0 || dim > 65535) throw DomainError("tensor algebra dimension must be in [1, 65535]");
  }

  std::size_t dim() const { return dim_; }
  std::string id() const { return "tensor(" + std::to_string(dim_) + ")"; }
  bool is_commutative() const { return dim_ == 1; }
  Word unit() const { return Word(); }
  std::size_t degree(const Word& w) const { return w.degree(); }

  std::vector<std::vector<Word>> basis_up_to(std::size_t n) const {
    std::vector<std::vector<Word>> out{{Word()}};
    for (std::size_t d = 1; d <= n; ++d) {
      std::vector<Word> level;
      for (const auto& w : out.back())
        for (std::size_t l = 0; l < dim_; ++l) level.push_back(w * Word({static_cast<std::uint16_t>(l)}));
      out.push_back(std::move(level));
    }
    return out;
  }

  Word multiply(const Word& a, const Word& b) const { return a * b; }
  std::vector<CoproductTerm<Word>> coproduct(const Word& w) const { return tensor_coproduct(w); }
  WordVector antipode(const Word& w) const { return tensor_antipode(w); }
  std::int64_t counit(const Word& w) const { return tensor_counit(w); }
  std::string format(const Word& w) const { return w.str(); }
  Word parse(std::string_view text) const {
    Word w = parse_word(text);
    for (auto l : w.letters())
      if (l >= dim_) throw ParseError("generator v" + std::to_string(l) + " outside " + id());
    return w;
  }

  friend bool operator==(const TensorAlgebra&, const TensorAlgebra&) = default;

 private:
  std::size_t dim_;
};

}  // namespace hopfchar

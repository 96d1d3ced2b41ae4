#pragma once

// Free associative unital algebra over Q on generators u(i,j).

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

// Generator u(row, col), 0-based. Letters are encoded as row * 16 + col so
// that byte order of letters coincides with row-major generator precedence.
struct GenId {
  std::uint8_t row = 0;
  std::uint8_t col = 0;

  static constexpr int kStride = 16;

  constexpr unsigned char letter() const {
    return static_cast<unsigned char>(row * kStride + col);
  }
  static constexpr GenId from_letter(unsigned char c) {
    return GenId{static_cast<std::uint8_t>(c / kStride), static_cast<std::uint8_t>(c % kStride)};
  }
  friend constexpr auto operator<=>(const GenId&, const GenId&) = default;
};

// A monomial of the free algebra. The empty word is the unit.
class Word {
public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<GenId> gens);

  static Word of(GenId g) { return Word(std::string(1, static_cast<char>(g.letter()))); }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  GenId at(std::size_t i) const { return GenId::from_letter(static_cast<unsigned char>(letters_[i])); }

  const std::string& letters() const { return letters_; }
  std::string_view view() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  // Position of the first occurrence of `w` as a contiguous subword.
  std::size_t find(const Word& w, std::size_t from = 0) const { return letters_.find(w.letters_, from); }
  bool contains(const Word& w) const { return find(w) != std::string::npos; }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string() const;

private:
  std::string letters_;
};

enum class WordOrder {
  // Degree first, then letters left to right by generator precedence.
  DegLex,
};

std::strong_ordering word_cmp(const Word& a, const Word& b, WordOrder order = WordOrder::DegLex);

inline bool deglex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b.view(), a.view()); }
};

struct Term {
  Word word;
  Rational coeff;
};

// Exact rational linear combination of words, stored with nonzero
// coefficients in strictly descending word order.
class Poly {
public:
  Poly() = default;
  Poly(Rational c);
  Poly(GenId g);
  Poly(Word w, Rational c = 1);

  // Builds a canonical polynomial from arbitrary (possibly repeated, zero) terms.
  static Poly from_terms(std::vector<Term> terms);
  // Takes ownership of terms already in canonical order. Not checked.
  static Poly from_sorted(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().word.degree(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const;
  const Word& leading_word() const { return leading_term().word; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Poly monic() const;
  Poly tail() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(const Rational& c, const Poly& f);

  // left * f * right for words left, right.
  Poly sandwich(const Word& left, const Word& right) const;

  friend bool operator==(const Poly& f, const Poly& g);
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  // Stable rendering, e.g. "u(1,1)*u(1,2) - 2*u(2,2) + 1".
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

inline Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
inline Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly scalar_mul(const Rational& c, const Poly& f) { return c * f; }
std::pair<Word, Rational> leading_term(const Poly& f, WordOrder order = WordOrder::DegLex);

// u(a)u(b) - u(b)u(a)
Poly commutator(GenId a, GenId b);

}  // namespace qsym

template <>
struct std::hash<qsym::Word> {
  std::size_t operator()(const qsym::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};

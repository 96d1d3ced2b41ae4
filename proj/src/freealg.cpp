#include "qsym/freealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

Word::Word(std::initializer_list<GenId> gens) {
  letters_.reserve(gens.size());
  for (GenId g : gens) letters_.push_back(static_cast<char>(g.letter()));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    GenId g = at(i);
    if (i) out += '*';
    out += "u(" + std::to_string(g.row + 1) + "," + std::to_string(g.col + 1) + ")";
  }
  return out;
}

std::strong_ordering word_cmp(const Word& a, const Word& b, WordOrder order) {
  switch (order) {
    case WordOrder::DegLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      // std::string compares chars as unsigned, matching letter precedence.
      return a.letters().compare(b.letters()) <=> 0;
  }
  return std::strong_ordering::equal;
}

Poly::Poly(Rational c) {
  if (!c.is_zero()) terms_.push_back({Word(), std::move(c)});
}

Poly::Poly(GenId g) { terms_.push_back({Word::of(g), 1}); }

Poly::Poly(Word w, Rational c) {
  if (!c.is_zero()) terms_.push_back({std::move(w), std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return deglex_less(b.word.view(), a.word.view()); });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().word == t.word) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  return from_sorted(std::move(merged));
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  Rational inv = terms_.front().coeff.inverse();
  return inv * *this;
}

Poly Poly::tail() const {
  if (terms_.empty()) return {};
  return from_sorted(std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& f, const Poly& g) {
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin(), ae = f.terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  while (a != ae && b != be) {
    if (a->word == b->word) {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->word, std::move(c)});
      ++a;
      ++b;
    } else if (deglex_less(b->word.view(), a->word.view())) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return Poly::from_sorted(std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
  std::vector<Term> out;
  out.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) out.push_back({a.word * b.word, a.coeff * b.coeff});
  return Poly::from_terms(std::move(out));
}

Poly operator*(const Rational& c, const Poly& f) {
  if (c.is_zero()) return {};
  Poly r = f;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::sandwich(const Word& left, const Word& right) const {
  // Multiplying by words on both sides preserves the relative order of terms.
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({left * t.word * right, t.coeff});
  return r;
}

bool operator==(const Poly& f, const Poly& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (f.terms_[i].word != g.terms_[i].word || f.terms_[i].coeff != g.terms_[i].coeff) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff.sign() < 0;
    Rational mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.word.empty()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += t.word.to_string();
    }
  }
  return out;
}

std::pair<Word, Rational> leading_term(const Poly& f, WordOrder) {
  const Term& t = f.leading_term();
  return {t.word, t.coeff};
}

Poly commutator(GenId a, GenId b) {
  return Poly(Word{a, b}) - Poly(Word{b, a});
}

}  // namespace qsym

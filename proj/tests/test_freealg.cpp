#include <algorithm>
#include <random>

#include "doctest.h"
#include "qsym/freealg.hpp"
#include "test_support.hpp"

using namespace qsym;
using testsupport::gen;
using testsupport::u;
using testsupport::word;

TEST_SUITE("freealg") {
  TEST_CASE("deglex comparisons") {
    CHECK(word_cmp(word({{1, 1}, {1, 2}}), word({{1, 1}})) == std::strong_ordering::greater);
    CHECK(word_cmp(word({{1, 1}, {2, 2}}), word({{1, 2}, {1, 1}})) == std::strong_ordering::less);
    CHECK(word_cmp(word({{2, 1}}), word({{1, 3}})) == std::strong_ordering::greater);
    CHECK(word_cmp(Word(), word({{1, 1}})) == std::strong_ordering::less);
    CHECK(word_cmp(word({{1, 2}, {1, 3}}), word({{1, 2}, {1, 3}})) == std::strong_ordering::equal);
  }

  TEST_CASE("degree-two words on three generators sort row-major") {
    std::vector<Word> expected;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) expected.push_back(word({{1, a}, {1, b}}));
    std::vector<Word> shuffled = expected;
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::sort(shuffled.begin(), shuffled.end(),
                [](const Word& x, const Word& y) { return word_cmp(x, y) == std::strong_ordering::less; });
      CHECK(shuffled == expected);
    }
  }

  TEST_CASE("word order is admissible") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
      const Word a = testsupport::random_word(rng, 9, 4);
      const Word b = testsupport::random_word(rng, 9, 4);
      const Word c = testsupport::random_word(rng, 9, 3);
      const Word d = testsupport::random_word(rng, 9, 3);
      const auto ab = word_cmp(a, b);
      CHECK(word_cmp(b, a) == (0 <=> ab));
      CHECK(word_cmp(c * a * d, c * b * d) == ab);
      if (!c.empty()) CHECK(word_cmp(a, c * a) == std::strong_ordering::less);
      CHECK(word_cmp(Word(), a * d) != std::strong_ordering::greater);
    }
  }

  TEST_CASE("noncommutative products keep cross terms") {
    const Poly lhs = (u(1, 1) + u(1, 2)) * (u(1, 1) - u(1, 2));
    const Poly rhs = Poly(word({{1, 1}, {1, 1}})) - Poly(word({{1, 1}, {1, 2}})) + Poly(word({{1, 2}, {1, 1}})) -
                     Poly(word({{1, 2}, {1, 2}}));
    CHECK(lhs == rhs);
    CHECK(lhs.size() == 4);
  }

  TEST_CASE("additive inverse") {
    const Poly f = u(1, 1) * u(2, 3) - Rational(3, 2) * u(3, 3) + Poly(Rational(4));
    CHECK((f + Rational(-1) * f).is_zero());
    CHECK((f - f).is_zero());
  }

  TEST_CASE("leading terms") {
    const Poly f = u(1, 1) + u(1, 1) * u(1, 2);
    CHECK(leading_term(f).first == word({{1, 1}, {1, 2}}));
    CHECK(leading_term(f).second == Rational(1));
    const Poly g = Poly(Rational(3)) - Rational(2) * u(2, 2);
    CHECK(leading_term(g).first == word({{2, 2}}));
    CHECK(leading_term(g).second == Rational(-2));
    const Poly row = u(1, 1) + u(1, 2) + u(1, 3) - Poly(Rational(1));
    CHECK(leading_term(row).first == word({{1, 3}}));
    CHECK(leading_term(row).second == Rational(1));
    CHECK_THROWS(leading_term(Poly()));
  }

  TEST_CASE("rendering") {
    const Poly f = u(1, 1) * u(1, 2) - Rational(2) * u(2, 2) + Poly(Rational(1));
    CHECK(f.to_string() == "u(1,1)*u(1,2) - 2*u(2,2) + 1");
    CHECK(Poly().to_string() == "0");
    CHECK(Word().to_string() == "1");
    CHECK(commutator(gen(1, 1), gen(2, 2)).to_string() == "-u(2,2)*u(1,1) + u(1,1)*u(2,2)");
  }

  TEST_CASE("commutator of a generator with itself vanishes") {
    CHECK(commutator(gen(2, 3), gen(2, 3)).is_zero());
    CHECK(commutator(gen(1, 2), gen(2, 1)) == -commutator(gen(2, 1), gen(1, 2)));
  }

  TEST_CASE("terms stay sorted, merged and nonzero") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      const Poly f = testsupport::random_poly(rng, 4, 3, 6) * testsupport::random_poly(rng, 4, 2, 4);
      for (std::size_t k = 0; k < f.terms().size(); ++k) {
        CHECK_FALSE(f.terms()[k].coeff.is_zero());
        if (k) CHECK(word_cmp(f.terms()[k - 1].word, f.terms()[k].word) == std::strong_ordering::greater);
      }
    }
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(2026);
    const Poly one(Rational(1));
    for (int i = 0; i < 1000; ++i) {
      const Poly f = testsupport::random_poly(rng, 4, 3, 4);
      const Poly g = testsupport::random_poly(rng, 4, 3, 4);
      const Poly h = testsupport::random_poly(rng, 4, 2, 3);
      const Rational c(static_cast<std::int64_t>(i % 7) - 3, 2);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((g + h) * f == g * f + h * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f + g == g + f);
      CHECK(one * f == f);
      CHECK(f * one == f);
      CHECK(f + Poly() == f);
      CHECK(c * (f * g) == (c * f) * g);
      CHECK(c * (f + g) == c * f + c * g);
    }
  }
}

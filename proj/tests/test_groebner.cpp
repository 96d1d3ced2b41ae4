#include <random>

#include "doctest.h"
#include "qsym/groebner.hpp"
#include "qsym/qsym.hpp"
#include "test_support.hpp"

using namespace qsym;
using testsupport::gen;
using testsupport::u;
using testsupport::word;

namespace {

std::vector<Poly> relations_of(const Graph& g, FultonMode mode = FultonMode::Delete) {
  return build_relations(g, zero_pattern(g), mode).relations;
}

const GroebnerEngine& k4_engine() {
  static const GroebnerEngine engine = [] {
    GroebnerEngine e(relations_of(testsupport::complete(4)));
    e.run(12);
    return e;
  }();
  return engine;
}

// Rewrites a randomly chosen reducible occurrence until none is left.
Poly random_reduce(Poly f, const std::vector<Poly>& basis, std::mt19937_64& rng) {
  for (;;) {
    struct Site {
      std::size_t term, elem, pos;
    };
    std::vector<Site> sites;
    for (std::size_t t = 0; t < f.terms().size(); ++t) {
      const std::string& w = f.terms()[t].word.letters();
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::string& lw = basis[b].leading_word().letters();
        for (std::size_t p = w.find(lw); p != std::string::npos; p = w.find(lw, p + 1)) sites.push_back({t, b, p});
      }
    }
    if (sites.empty()) return f;
    const Site s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const Term& t = f.terms()[s.term];
    const std::size_t len = basis[s.elem].leading_word().degree();
    const Word left = t.word.subword(0, s.pos);
    const Word right = t.word.subword(s.pos + len);
    f = f - t.coeff * basis[s.elem].sandwich(left, right);
  }
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("normal form examples") {
    const std::vector<Poly> idem{u(1, 1) * u(1, 1) - u(1, 1)};
    CHECK(normal_form(Poly(), idem).is_zero());
    CHECK(normal_form(u(1, 1) * u(1, 1) * u(1, 1), idem) == u(1, 1));
    CHECK(normal_form(u(1, 2) * u(1, 1) * u(1, 1) * u(1, 2), idem) == u(1, 2) * u(1, 1) * u(1, 2));
  }

  TEST_CASE("obstructions between leading words") {
    const std::vector<Poly> chain{Poly(word({{1, 1}, {1, 2}})), Poly(word({{1, 2}, {1, 3}}))};
    const auto obs = find_obstructions(chain);
    REQUIRE(obs.size() == 1);
    CHECK(obs[0] == Obstruction{0, 1, 1, 3});

    const std::vector<Poly> idem{u(1, 1) * u(1, 1) - u(1, 1)};
    const auto self = find_obstructions(idem);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == Obstruction{0, 0, 1, 3});

    CHECK(find_obstructions({u(1, 1), u(2, 2)}).empty());
  }

  TEST_CASE("s-polynomial of an overlap") {
    const Poly a = Poly(word({{1, 1}, {1, 2}})) - u(1, 1);
    const Poly b = Poly(word({{1, 2}, {1, 3}})) - u(1, 3);
    // a*u13 - u11*b = -u11*u13 + u11*u13
    CHECK(s_polynomial(a, b, 1).is_zero());
    const Poly c = Poly(word({{1, 2}, {1, 3}})) - u(2, 2);
    CHECK(s_polynomial(a, c, 1) == u(1, 1) * u(2, 2) - u(1, 1) * u(1, 3));
  }

  TEST_CASE("single idempotent is already a complete basis") {
    const GBasis b = complete({u(1, 1) * u(1, 1) - u(1, 1)}, WordOrder::DegLex, 4);
    CHECK(b.complete);
    REQUIRE(b.polys.size() == 1);
    CHECK(b.polys[0] == u(1, 1) * u(1, 1) - u(1, 1));
  }

  TEST_CASE("commuting involution pair") {
    const Poly x = u(1, 1), y = u(1, 2);
    const GBasis b = complete({x * y - y * x, x * x - Poly(Rational(1))}, WordOrder::DegLex, 6);
    CHECK(b.complete);
    REQUIRE(b.polys.size() == 2);
    CHECK(b.polys[0] == x * x - Poly(Rational(1)));
    CHECK(b.polys[1] == y * x - x * y);
    CHECK(ideal_member(x * y * x - y, b) == Membership::Member);
    CHECK(ideal_member(y * x * x * y - y * y, b) == Membership::Member);
    CHECK(ideal_member(x - y, b) == Membership::NonMember);
    CHECK(ideal_member(y * y - Poly(Rational(1)), b) == Membership::NonMember);
  }

  TEST_CASE("complete graph on four vertices") {
    const GroebnerEngine& e = k4_engine();
    CHECK(e.complete());
    CHECK(e.member(commutator(gen(1, 1), gen(2, 2))) == Membership::NonMember);
    CHECK(e.member(commutator(gen(1, 1), gen(1, 2))) == Membership::Member);
    for (const Poly& r : relations_of(testsupport::complete(4))) CHECK(e.member(r) == Membership::Member);
  }

  TEST_CASE("broken roof commutators reduce to zero") {
    GroebnerEngine e(relations_of(testsupport::broken_roof()));
    e.run(12);
    CHECK(e.complete());
    CHECK(e.reduce(commutator(gen(2, 2), gen(3, 3))).is_zero());
    CHECK(e.member(commutator(gen(2, 3), gen(4, 2))) == Membership::Member);
  }

  TEST_CASE("a starved degree bound leaves membership unknown") {
    // yx - xy = x(xyx - y) - (x^2 - 1)yx only appears through a degree-4 overlap.
    const Poly x = u(1, 1), y = u(1, 2);
    GroebnerEngine e({x * y * x - y, x * x - Poly(Rational(1))});
    e.run(3);
    CHECK_FALSE(e.complete());
    CHECK(e.member(y * x - x * y) == Membership::Unknown);
    CHECK(e.member(x * x - Poly(Rational(1))) == Membership::Member);
    e.run(4);
    CHECK(e.member(y * x - x * y) == Membership::Member);
    e.run(8);
    CHECK(e.complete());
    CHECK(e.member(x - y) == Membership::NonMember);

    GroebnerEngine k4(relations_of(testsupport::complete(4)));
    k4.run(2);
    CHECK_FALSE(k4.complete());
    std::size_t unknown = 0;
    for (const Poly& f : k4_engine().polys()) {
      const Membership m = k4.member(f);
      CHECK(m != Membership::NonMember);
      unknown += m == Membership::Unknown;
    }
    CHECK(unknown > 0);
  }

  TEST_CASE("resuming from a lower bound matches a fresh run") {
    const auto rels = relations_of(testsupport::cycle(4));
    GroebnerEngine stepwise(rels);
    for (int d = 2; d <= 12; d += 2) stepwise.run(d);
    GroebnerEngine fresh(rels);
    fresh.run(12);
    CHECK(stepwise.complete() == fresh.complete());
    CHECK(stepwise.polys() == fresh.polys());
  }

  TEST_CASE("basis is monic and interreduced") {
    const std::vector<Poly> polys = k4_engine().polys();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      CHECK(polys[i].leading_coeff().is_one());
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (i == j) continue;
        for (const Term& t : polys[i].terms()) CHECK_FALSE(t.word.contains(polys[j].leading_word()));
      }
    }
  }

  TEST_CASE("resource caps fail loudly") {
    const auto rels = relations_of(testsupport::complete(4));
    auto attempt = [&](CompletionLimits limits) {
      GroebnerEngine e(rels, limits);
      e.run(12);
    };
    CHECK_THROWS_AS(attempt(CompletionLimits{10, 1000000}), ResourceCapExceeded);
    CHECK_THROWS_AS(attempt(CompletionLimits{100000, 50}), ResourceCapExceeded);
    CHECK_THROWS_AS(attempt(CompletionLimits{100, 1000000}), ResourceCapExceeded);
    CHECK_NOTHROW(attempt(CompletionLimits{}));
  }

  TEST_CASE("normal forms are idempotent and certified by cofactors") {
    const std::vector<Poly> basis = k4_engine().polys();
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
      const Poly f = testsupport::random_poly(rng, 9, 4, 5);
      std::vector<Cofactor> steps;
      const Poly nf = normal_form_with_cofactors(f, basis, steps);
      CHECK(nf == normal_form(f, basis));
      CHECK(normal_form(nf, basis) == nf);
      Poly sum;
      for (const Cofactor& s : steps) sum = sum + s.coeff * basis[s.index].sandwich(s.left, s.right);
      CHECK(f - nf == sum);
    }
  }

  TEST_CASE("complete bases are confluent under random rewriting") {
    const std::vector<Poly> basis = k4_engine().polys();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const Poly f = testsupport::random_poly(rng, 9, 4, 4);
      CHECK(random_reduce(f, basis, rng) == normal_form(f, basis));
    }
  }
}

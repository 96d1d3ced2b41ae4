#include <set>

#include "doctest.h"
#include "qsym/qsym.hpp"
#include "test_support.hpp"

using namespace qsym;
using testsupport::gen;
using testsupport::u;

namespace {

std::set<std::string> rendered(const std::vector<Poly>& polys) {
  std::set<std::string> out;
  for (const Poly& p : polys) out.insert(p.to_string());
  return out;
}

// The four relation families written out index by index for a graph whose
// pattern forces nothing.
std::set<std::string> unreduced_relations(const Graph& g) {
  const int n = g.n();
  std::set<std::string> out;
  auto add = [&](const Poly& p) {
    if (!p.is_zero()) out.insert(p.monic().to_string());
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        add(u(i, j) * u(i, k) - (j == k ? u(i, j) : Poly()));
        add(u(j, i) * u(k, i) - (j == k ? u(j, i) : Poly()));
      }
  for (int i = 1; i <= n; ++i) {
    Poly row(Rational(-1)), col(Rational(-1));
    for (int k = 1; k <= n; ++k) {
      row = row + u(i, k);
      col = col + u(k, i);
    }
    add(row);
    add(col);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (g.adjacent(i - 1, j - 1) != g.adjacent(k - 1, l - 1)) add(u(i, k) * u(j, l));
  return out;
}

Poly shift(const Poly& f, int by) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    Word w;
    for (std::size_t i = 0; i < t.word.degree(); ++i) {
      const GenId g = t.word.at(i);
      w = w * Word::of(GenId{static_cast<std::uint8_t>(g.row + by), static_cast<std::uint8_t>(g.col + by)});
    }
    terms.push_back({w, t.coeff});
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace

TEST_SUITE("qsym") {
  TEST_CASE("complete graph presentation matches the index-by-index families") {
    const Graph k4 = testsupport::complete(4);
    const Presentation p = build_relations(k4, zero_pattern(k4));
    CHECK(p.alive.size() == 16);
    const auto expected = unreduced_relations(k4);
    CHECK(expected.size() == 120);
    CHECK(p.relations.size() == expected.size());
    CHECK(rendered(p.relations) == expected);
    for (const Poly& r : p.relations) CHECK(r.leading_coeff().is_one());
  }

  TEST_CASE("cycle presentation matches the index-by-index families") {
    const Graph c5 = testsupport::cycle(5);
    const Presentation p = build_relations(c5, zero_pattern(c5));
    CHECK(rendered(p.relations) == unreduced_relations(c5));
  }

  TEST_CASE("broken roof reduces to the triangle system") {
    const Graph g = testsupport::broken_roof();
    const Presentation p = build_relations(g, zero_pattern(g));
    std::vector<GenId> block;
    for (int i = 2; i <= 4; ++i)
      for (int j = 2; j <= 4; ++j) block.push_back(gen(i, j));
    CHECK(p.alive == block);
    const Graph k3 = testsupport::complete(3);
    const Presentation tri = build_relations(k3, zero_pattern(k3));
    std::vector<Poly> shifted;
    for (const Poly& r : tri.relations) shifted.push_back(shift(r, 1));
    CHECK(rendered(p.relations) == rendered(shifted));
  }

  TEST_CASE("single vertex") {
    const Graph g(1);
    const Presentation del = build_relations(g, zero_pattern(g));
    CHECK(del.alive.empty());
    CHECK(del.relations.empty());
    const Presentation rel = build_relations(g, zero_pattern(g), FultonMode::Relations);
    CHECK(rel.alive == std::vector<GenId>{gen(1, 1)});
    CHECK(rendered(rel.relations).count("u(1,1) - 1"));
    CHECK(qsym_check(rel).kind == QsymResult::Kind::Commutative);
    CHECK(classify(g).kind == VerdictKind::NotQuantumSymmetric);
  }

  TEST_CASE("relations mode keeps forced generators as relations") {
    const Graph g = testsupport::santas_house();
    const Presentation p = build_relations(g, zero_pattern(g), FultonMode::Relations);
    CHECK(p.alive.size() == 25);
    CHECK(rendered(p.relations).count("u(1,2)"));
    CHECK(rendered(p.relations).count("u(5,5) + u(5,4) + u(5,3) + u(5,2) + u(5,1) - 1"));
    const Presentation d = build_relations(g, zero_pattern(g));
    CHECK(d.alive.size() == 8);
  }

  TEST_CASE("a row without survivors is degenerate") {
    const Graph g = testsupport::path(3);
    ZeroPattern z = zero_pattern(g);
    for (int j = 0; j < 3; ++j) z.forced_zero[0][j] = true;
    CHECK_THROWS_AS(build_relations(g, z), DegenerateInput);
  }

  TEST_CASE("commutator counts") {
    Presentation two;
    two.n = 2;
    two.alive = {gen(1, 1), gen(1, 2)};
    CHECK(commutators(two).size() == 1);
    const Graph k4 = testsupport::complete(4);
    CHECK(commutators(build_relations(k4, zero_pattern(k4))).size() == 120);
    const Graph r = testsupport::rigid_six();
    CHECK(commutators(build_relations(r, zero_pattern(r))).empty());
  }

  TEST_CASE("algebraic check on the four-vertex examples") {
    auto check = [](const Graph& g) { return qsym_check(build_relations(g, zero_pattern(g))); };
    CHECK(check(testsupport::path(4)).kind == QsymResult::Kind::Commutative);
    CHECK(check(testsupport::star(3)).kind == QsymResult::Kind::Commutative);
    const QsymResult c4 = check(testsupport::cycle(4));
    CHECK(c4.kind == QsymResult::Kind::NotShownCommutative);
    CHECK(c4.basis_complete);
    REQUIRE(c4.witness);
    REQUIRE(c4.witness_normal_form);
    CHECK_FALSE(c4.witness_normal_form->is_zero());
    const QsymResult rigid = check(testsupport::rigid_six());
    CHECK(rigid.kind == QsymResult::Kind::Commutative);
    CHECK_FALSE(rigid.engine_used);
  }

  TEST_CASE("verdicts on worked examples") {
    const Verdict santa = classify(testsupport::santas_house());
    CHECK(santa.kind == VerdictKind::QuantumSymmetric);
    REQUIRE(santa.disjoint_pair);
    std::set<std::vector<int>> supports{santa.disjoint_pair->first.support(), santa.disjoint_pair->second.support()};
    CHECK(supports == std::set<std::vector<int>>{{1, 2}, {0, 3}});
    CHECK(santa.alive_generators == 8);
    CHECK_FALSE(santa.qsym);

    const Verdict roof = classify(testsupport::broken_roof());
    CHECK(roof.kind == VerdictKind::NotQuantumSymmetric);
    CHECK(roof.aut_order == 6);

    const Verdict rigid = classify(testsupport::rigid_six());
    CHECK(rigid.kind == VerdictKind::NotQuantumSymmetric);
    CHECK(rigid.alive_generators == 0);

    for (int n = 1; n <= 3; ++n)
      for (const Graph& g : enumerate_connected(n)) CHECK(classify(g).kind == VerdictKind::NotQuantumSymmetric);
  }

  TEST_CASE("cross-checking runs the algebra behind a disjoint pair") {
    QsymConfig cfg;
    cfg.cross_check = true;
    const Verdict v = classify(testsupport::cycle(4), cfg);
    CHECK(v.kind == VerdictKind::QuantumSymmetric);
    REQUIRE(v.qsym);
    CHECK(v.qsym->kind == QsymResult::Kind::NotShownCommutative);
  }

  TEST_CASE("exhausted degree cap is truncated") {
    Presentation p;
    p.n = 1;
    p.alive = {gen(1, 1), gen(1, 2)};
    const Poly x = u(1, 1), y = u(1, 2);
    p.relations = {x * y * x - y, x * x - Poly(Rational(1))};
    QsymConfig cfg;
    cfg.gb_start = 2;
    cfg.gb_step = 1;
    cfg.gb_cap = 3;
    const QsymResult starved = qsym_check(p, cfg);
    CHECK(starved.kind == QsymResult::Kind::Truncated);
    CHECK_FALSE(starved.basis_complete);
    CHECK(starved.degree_bound == 3);
    REQUIRE(starved.witness);
    cfg.gb_cap = 4;
    const QsymResult enough = qsym_check(p, cfg);
    CHECK(enough.kind == QsymResult::Kind::Commutative);
    CHECK(enough.degree_bound == 4);

    Verdict v;
    v.kind = VerdictKind::Undecided;
    v.aut_order = 1;
    v.qsym = starved;
    CHECK(to_string(v.kind) == std::string("undecided"));
  }

  TEST_CASE("small degree caps still settle graphs without quantum symmetries") {
    QsymConfig cfg;
    cfg.gb_start = 1;
    cfg.gb_cap = 1;
    const Verdict v = classify(testsupport::cycle(5), cfg);
    REQUIRE(v.qsym);
    CHECK(v.qsym->kind == QsymResult::Kind::Commutative);
    CHECK(v.kind == VerdictKind::NotQuantumSymmetric);
    cfg.cross_check = true;
    const Verdict c4 = classify(testsupport::cycle(4), cfg);
    REQUIRE(c4.qsym);
    CHECK(c4.qsym->kind == QsymResult::Kind::Truncated);
    CHECK(c4.kind == VerdictKind::QuantumSymmetric);
  }

  TEST_CASE("fulton modes agree on all connected graphs up to five vertices") {
    QsymConfig del, rel;
    del.cross_check = rel.cross_check = true;
    rel.fulton_mode = FultonMode::Relations;
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_connected(n)) {
        const Verdict a = classify(g, del);
        const Verdict b = classify(g, rel);
        CHECK_MESSAGE(a.kind == b.kind, to_graph6(g));
        REQUIRE(a.qsym);
        REQUIRE(b.qsym);
        CHECK_MESSAGE(a.qsym->kind == b.qsym->kind, to_graph6(g));
      }
  }
}

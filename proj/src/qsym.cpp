#include "qsym/qsym.hpp"

#include <unordered_set>

namespace qsym {
namespace {

enum class Slot { Zero, One, Var };

class RelationSet {
public:
  void add(const Poly& p) {
    if (p.is_zero()) return;
    Poly m = p.monic();
    if (m.degree() == 0) throw DegenerateInput("relations force 1 = 0: " + p.to_string());
    if (seen_.insert(m.to_string()).second) polys_.push_back(std::move(m));
  }
  std::vector<Poly> take() { return std::move(polys_); }

private:
  std::unordered_set<std::string> seen_;
  std::vector<Poly> polys_;
};

}  // namespace

const char* to_string(FultonMode m) { return m == FultonMode::Delete ? "delete" : "relations"; }

const char* to_string(QsymResult::Kind k) {
  switch (k) {
    case QsymResult::Kind::Commutative:
      return "commutative";
    case QsymResult::Kind::NotShownCommutative:
      return "not_shown_commutative";
    case QsymResult::Kind::Truncated:
      return "truncated";
  }
  return "?";
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::QuantumSymmetric:
      return "quantum_symmetric";
    case VerdictKind::NotQuantumSymmetric:
      return "not_quantum_symmetric";
    case VerdictKind::Undecided:
      return "undecided";
  }
  return "?";
}

Presentation build_relations(const Graph& g, const ZeroPattern& z, FultonMode mode) {
  const int n = g.n();
  if (z.n != n) throw std::invalid_argument("zero pattern does not match graph");
  std::vector<std::vector<Slot>> slot(n, std::vector<Slot>(n, Slot::Var));
  if (mode == FultonMode::Delete) {
    for (int i = 0; i < n; ++i) {
      int survivors = 0;
      for (int j = 0; j < n; ++j) {
        if (z.forced(i, j)) {
          slot[i][j] = Slot::Zero;
        } else {
          ++survivors;
        }
      }
      if (survivors == 0) throw DegenerateInput("row " + std::to_string(i + 1) + " has no surviving generator");
    }
    // Forced zeros are symmetric and the diagonal always survives, so the
    // surviving entries form blocks; a 1x1 block is a generator equal to 1.
    for (int i = 0; i < n; ++i) {
      int survivors = 0;
      for (int j = 0; j < n; ++j) survivors += slot[i][j] == Slot::Var;
      if (survivors == 1)
        for (int j = 0; j < n; ++j)
          if (slot[i][j] == Slot::Var) slot[i][j] = Slot::One;
    }
  }

  auto u = [&](int i, int j) -> Poly {
    switch (slot[i][j]) {
      case Slot::Zero:
        return Poly();
      case Slot::One:
        return Poly(Rational(1));
      case Slot::Var:
        break;
    }
    return Poly(GenId{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
  };

  RelationSet rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly col = u(i, k) * u(j, k);
        Poly row = u(k, i) * u(k, j);
        if (i == j) {
          col = col - u(i, k);
          row = row - u(k, i);
        }
        rel.add(col);
        rel.add(row);
      }
  for (int i = 0; i < n; ++i) {
    Poly row_sum(Rational(-1)), col_sum(Rational(-1));
    for (int j = 0; j < n; ++j) {
      row_sum = row_sum + u(i, j);
      col_sum = col_sum + u(j, i);
    }
    rel.add(row_sum);
    rel.add(col_sum);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (g.adjacent(i, j) != g.adjacent(k, l)) rel.add(u(i, k) * u(j, l));
  if (mode == FultonMode::Relations) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (z.forced(i, j)) rel.add(u(i, j));
  }

  Presentation p;
  p.n = n;
  p.mode = mode;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (slot[i][j] == Slot::Var)
        p.alive.push_back(GenId{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
  p.relations = rel.take();
  return p;
}

std::vector<Poly> commutators(const Presentation& p) {
  std::vector<Poly> out;
  for (std::size_t a = 0; a < p.alive.size(); ++a)
    for (std::size_t b = a + 1; b < p.alive.size(); ++b) out.push_back(commutator(p.alive[a], p.alive[b]));
  return out;
}

QsymResult qsym_check(const Presentation& p, const QsymConfig& cfg) {
  QsymResult res;
  const auto comms = commutators(p);
  res.commutator_count = comms.size();
  if (comms.empty()) {
    res.basis_complete = true;
    return res;
  }
  res.engine_used = true;
  GroebnerEngine engine(p.relations, cfg.limits);
  std::vector<bool> proven(comms.size(), false);
  int bound = std::min(cfg.gb_start, cfg.gb_cap);
  for (;;) {
    engine.run(bound);
    res.degree_bound = bound;
    res.basis_size = engine.size();
    res.basis_complete = engine.complete();
    std::optional<std::size_t> open;
    for (std::size_t c = 0; c < comms.size(); ++c) {
      if (proven[c]) continue;
      Poly nf = engine.reduce(comms[c]);
      if (nf.is_zero()) {
        proven[c] = true;
        continue;
      }
      if (res.basis_complete) {
        res.kind = QsymResult::Kind::NotShownCommutative;
        res.witness = comms[c];
        res.witness_normal_form = nf;
        return res;
      }
      if (!open) {
        open = c;
        res.witness = comms[c];
        res.witness_normal_form = nf;
      }
    }
    if (!open) {
      res.kind = QsymResult::Kind::Commutative;
      res.witness.reset();
      res.witness_normal_form.reset();
      return res;
    }
    if (bound >= cfg.gb_cap) {
      res.kind = QsymResult::Kind::Truncated;
      return res;
    }
    bound = std::min(bound + std::max(cfg.gb_step, 1), cfg.gb_cap);
  }
}

Verdict classify(const Graph& g, const QsymConfig& cfg) {
  Verdict v;
  const AutGroup group = automorphism_group(g);
  v.aut_order = group_order(group);
  v.disjoint_pair = find_disjoint_pair(group);

  const ZeroPattern z = zero_pattern(g, cfg.fulton_power);
  for (const auto& s : group.elements)
    for (int i = 0; i < g.n(); ++i)
      if (z.forced(i, s(i)))
        throw std::logic_error("automorphism " + s.to_cycles() + " maps a vertex onto a forced-zero position");

  const Presentation p = build_relations(g, z, cfg.fulton_mode);
  v.alive_generators = p.alive.size();
  if (v.disjoint_pair && !cfg.cross_check) {
    v.kind = VerdictKind::QuantumSymmetric;
    return v;
  }
  v.qsym = qsym_check(p, cfg);
  const bool commutative = v.qsym->kind == QsymResult::Kind::Commutative;
  if (v.disjoint_pair) {
    if (commutative)
      throw std::logic_error("graph " + to_graph6(g) +
                             " has disjoint automorphisms and a commutative algebra");
    v.kind = VerdictKind::QuantumSymmetric;
  } else {
    v.kind = commutative ? VerdictKind::NotQuantumSymmetric : VerdictKind::Undecided;
  }
  return v;
}

}  // namespace qsym

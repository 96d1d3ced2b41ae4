#pragma once

// Presentation of the algebra A+aut(G) by generators u(i,j) and relations,
// the commutativity check by Groebner bases, and the combined verdict.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsym/autgroup.hpp"
#include "qsym/freealg.hpp"
#include "qsym/fulton.hpp"
#include "qsym/graph.hpp"
#include "qsym/groebner.hpp"

namespace qsym {

// How generators forced to zero enter the presentation.
enum class FultonMode {
  // Forced generators are substituted by 0, and a generator that is the only
  // survivor of its row is substituted by 1.
  Delete,
  // Every generator is kept and u(i,j) itself is added as a relation.
  Relations,
};

const char* to_string(FultonMode m);

// The presentation would define the zero algebra, e.g. a row without any
// surviving generator.
class DegenerateInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Presentation {
  int n = 0;
  FultonMode mode = FultonMode::Delete;
  std::vector<GenId> alive;      // row-major
  std::vector<Poly> relations;   // monic, deduplicated
};

Presentation build_relations(const Graph& g, const ZeroPattern& z, FultonMode mode = FultonMode::Delete);

// u_a u_b - u_b u_a for every unordered pair of distinct alive generators.
std::vector<Poly> commutators(const Presentation& p);

struct QsymConfig {
  int fulton_power = 0;  // 0: n^2
  FultonMode fulton_mode = FultonMode::Delete;
  int gb_start = 4;
  int gb_step = 2;
  int gb_cap = 12;
  CompletionLimits limits{};
  // Also run the algebraic check when disjoint automorphisms already decide.
  bool cross_check = false;
};

struct QsymResult {
  enum class Kind { Commutative, NotShownCommutative, Truncated };
  Kind kind = Kind::Commutative;
  // First commutator not in the ideal and its normal form (NotShownCommutative),
  // or the first one left undecided (Truncated).
  std::optional<Poly> witness;
  std::optional<Poly> witness_normal_form;
  int degree_bound = 0;
  std::size_t basis_size = 0;
  bool basis_complete = false;
  bool engine_used = false;
  std::size_t commutator_count = 0;
};

const char* to_string(QsymResult::Kind k);

// Output 1 of the algorithm corresponds to Commutative.
QsymResult qsym_check(const Presentation& p, const QsymConfig& cfg = {});

enum class VerdictKind { QuantumSymmetric, NotQuantumSymmetric, Undecided };

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::size_t aut_order = 0;
  std::optional<std::pair<Permutation, Permutation>> disjoint_pair;
  // Present whenever the algebraic check ran.
  std::optional<QsymResult> qsym;
  std::size_t alive_generators = 0;
};

Verdict classify(const Graph& g, const QsymConfig& cfg = {});

}  // namespace qsym

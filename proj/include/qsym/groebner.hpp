#pragma once

// Two-sided Groebner bases in the free algebra: degree-truncated Buchberger
// completion over overlap ambiguities, normal forms and ideal membership.

#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsym/freealg.hpp"

namespace qsym {

class ResourceCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CompletionLimits {
  std::size_t max_basis_size = 200000;
  std::size_t max_total_terms = 50000000;
};

struct GBasis {
  std::vector<Poly> polys;
  WordOrder order = WordOrder::DegLex;
  int degree_bound = 0;
  // True iff no obstruction was left unresolved because of the degree bound.
  bool complete = false;
};

// Overlap of two leading words: the suffix of lw(left) of length `overlap`
// equals the prefix of lw(right) of the same length.
struct Obstruction {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t overlap = 0;
  std::size_t degree = 0;  // length of the overlap word

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

enum class Membership { Member, NonMember, Unknown };

const char* to_string(Membership m);

// Lookup of leading words occurring as subwords.
class LeadIndex {
public:
  void insert(const Word& lead, std::size_t id);
  void erase(const Word& lead);
  bool empty() const { return map_.empty(); }

  struct Hit {
    std::size_t id;
    std::size_t pos;
  };
  // Leftmost occurrence, shortest leading word first at that position.
  std::optional<Hit> find_in(const std::string& word) const;

private:
  std::unordered_map<std::string, std::size_t> map_;
  std::vector<std::size_t> length_count_;
};

// Reduces `f` completely by a set of monic polynomials with pairwise distinct
// leading words.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, WordOrder order = WordOrder::DegLex);

struct Cofactor {
  Rational coeff;
  Word left;
  std::size_t index;  // into the basis passed to the reduction
  Word right;
};

// Normal form together with the rewriting steps taken:
// f - nf = sum coeff * left * basis[index] * right.
Poly normal_form_with_cofactors(const Poly& f, const std::vector<Poly>& basis,
                                std::vector<Cofactor>& steps);

std::vector<Obstruction> find_obstructions(const std::vector<Poly>& basis);

// S-polynomial lw(left)-aligned: left * suffix - prefix * right.
Poly s_polynomial(const Poly& left, const Poly& right, std::size_t overlap);

// Incremental completion. The basis is kept monic and interreduced at all
// times; raising the degree bound resumes from the deferred obstructions.
class GroebnerEngine {
public:
  explicit GroebnerEngine(const std::vector<Poly>& generators, CompletionLimits limits = {},
                          WordOrder order = WordOrder::DegLex);

  void run(int degree_bound);

  bool complete() const;
  int degree_bound() const { return bound_; }
  std::size_t size() const;
  std::vector<Poly> polys() const;
  GBasis basis() const;

  Poly reduce(const Poly& f) const;
  Membership member(const Poly& f) const;

  std::size_t obstructions_processed() const { return processed_; }

private:
  struct QueuedObstruction {
    Obstruction ob;
    bool operator>(const QueuedObstruction& o) const;
  };

  void insert(Poly h);
  void check_limits() const;

  WordOrder order_;
  CompletionLimits limits_;
  std::vector<Poly> elems_;
  std::vector<bool> alive_;
  LeadIndex index_;
  std::priority_queue<QueuedObstruction, std::vector<QueuedObstruction>, std::greater<>> queue_;
  std::vector<Obstruction> deferred_;
  int bound_ = 0;
  std::size_t total_terms_ = 0;
  std::size_t processed_ = 0;
};

GBasis complete(const std::vector<Poly>& generators, WordOrder order, int degree_bound,
                CompletionLimits limits = {});

// Member when the normal form vanishes (sound for any basis of generators of
// the ideal); NonMember only when the basis is complete.
Membership ideal_member(const Poly& f, const GBasis& basis);

}  // namespace qsym

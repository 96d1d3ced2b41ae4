#include "qsym/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace qsym {
namespace {

struct HeapLess {
  bool operator()(const Term& a, const Term& b) const { return deglex_less(a.word.view(), b.word.view()); }
};

// Core rewriting loop. Terms are consumed from a max-heap so the output is
// produced in descending order; `step` is told about every rewrite.
template <class Step>
Poly reduce_with(const Poly& f, const LeadIndex& index, const std::vector<Poly>& elems, Step&& step) {
  if (f.is_zero() || index.empty()) return f;
  std::vector<Term> heap(f.terms().begin(), f.terms().end());
  std::make_heap(heap.begin(), heap.end(), HeapLess{});
  std::vector<Term> out;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), HeapLess{});
    Term t = std::move(heap.back());
    heap.pop_back();
    while (!heap.empty() && heap.front().word == t.word) {
      std::pop_heap(heap.begin(), heap.end(), HeapLess{});
      t.coeff += heap.back().coeff;
      heap.pop_back();
    }
    if (t.coeff.is_zero()) continue;
    auto hit = index.find_in(t.word.letters());
    if (!hit) {
      out.push_back(std::move(t));
      continue;
    }
    const Poly& g = elems[hit->id];
    const std::size_t lead_len = g.leading_word().degree();
    Word left = t.word.subword(0, hit->pos);
    Word right = t.word.subword(hit->pos + lead_len);
    step(t.coeff, left, hit->id, right);
    const auto& gt = g.terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      heap.push_back({left * gt[k].word * right, -(t.coeff * gt[k].coeff)});
      std::push_heap(heap.begin(), heap.end(), HeapLess{});
    }
  }
  return Poly::from_sorted(std::move(out));
}

LeadIndex index_of(const std::vector<Poly>& basis) {
  LeadIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) throw std::invalid_argument("zero polynomial in reduction basis");
    if (!basis[i].leading_coeff().is_one()) throw std::invalid_argument("reduction basis must be monic");
    idx.insert(basis[i].leading_word(), i);
  }
  return idx;
}

void push_overlaps(const Poly& a, std::size_t ia, const Poly& b, std::size_t ib,
                   std::vector<Obstruction>& out) {
  const std::string& p = a.leading_word().letters();
  const std::string& q = b.leading_word().letters();
  const std::size_t max_k = std::min(p.size(), q.size());
  for (std::size_t k = 1; k < max_k; ++k) {
    if (p.compare(p.size() - k, k, q, 0, k) == 0) out.push_back({ia, ib, k, p.size() + q.size() - k});
  }
}

}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Member:
      return "member";
    case Membership::NonMember:
      return "non_member";
    case Membership::Unknown:
      return "unknown";
  }
  return "?";
}

void LeadIndex::insert(const Word& lead, std::size_t id) {
  auto [it, fresh] = map_.emplace(lead.letters(), id);
  if (!fresh) throw std::logic_error("duplicate leading word " + lead.to_string());
  if (length_count_.size() <= lead.degree()) length_count_.resize(lead.degree() + 1, 0);
  ++length_count_[lead.degree()];
}

void LeadIndex::erase(const Word& lead) {
  if (map_.erase(lead.letters())) --length_count_[lead.degree()];
}

std::optional<LeadIndex::Hit> LeadIndex::find_in(const std::string& word) const {
  const std::size_t n = word.size();
  std::string key;
  for (std::size_t pos = 0; pos <= n; ++pos) {
    for (std::size_t len = 0; len < length_count_.size() && pos + len <= n; ++len) {
      if (length_count_[len] == 0) continue;
      key.assign(word, pos, len);
      auto it = map_.find(key);
      if (it != map_.end()) return Hit{it->second, pos};
    }
  }
  return std::nullopt;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, WordOrder) {
  LeadIndex idx = index_of(basis);
  return reduce_with(f, idx, basis, [](const Rational&, const Word&, std::size_t, const Word&) {});
}

Poly normal_form_with_cofactors(const Poly& f, const std::vector<Poly>& basis, std::vector<Cofactor>& steps) {
  LeadIndex idx = index_of(basis);
  return reduce_with(f, idx, basis, [&](const Rational& c, const Word& l, std::size_t i, const Word& r) {
    steps.push_back({c, l, i, r});
  });
}

std::vector<Obstruction> find_obstructions(const std::vector<Poly>& basis) {
  std::vector<Obstruction> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) push_overlaps(basis[i], i, basis[j], j, out);
  }
  std::sort(out.begin(), out.end(), [](const Obstruction& a, const Obstruction& b) {
    return std::tie(a.degree, a.left, a.right, a.overlap) < std::tie(b.degree, b.left, b.right, b.overlap);
  });
  return out;
}

Poly s_polynomial(const Poly& left, const Poly& right, std::size_t overlap) {
  const Word& p = left.leading_word();
  const Word& q = right.leading_word();
  Word suffix = q.subword(overlap);
  Word prefix = p.subword(0, p.degree() - overlap);
  return left.monic().sandwich(Word(), suffix) - right.monic().sandwich(prefix, Word());
}

bool GroebnerEngine::QueuedObstruction::operator>(const QueuedObstruction& o) const {
  return std::tie(ob.degree, ob.left, ob.right, ob.overlap) >
         std::tie(o.ob.degree, o.ob.left, o.ob.right, o.ob.overlap);
}

GroebnerEngine::GroebnerEngine(const std::vector<Poly>& generators, CompletionLimits limits, WordOrder order)
    : order_(order), limits_(limits) {
  for (const Poly& g : generators) {
    Poly h = reduce(g);
    if (!h.is_zero()) insert(h.monic());
  }
}

void GroebnerEngine::check_limits() const {
  if (size() > limits_.max_basis_size)
    throw ResourceCapExceeded("Groebner basis exceeded " + std::to_string(limits_.max_basis_size) + " elements");
  if (total_terms_ > limits_.max_total_terms)
    throw ResourceCapExceeded("Groebner basis exceeded " + std::to_string(limits_.max_total_terms) + " terms");
}

void GroebnerEngine::insert(Poly first) {
  std::vector<Poly> work{std::move(first)};
  while (!work.empty()) {
    Poly h = std::move(work.back());
    work.pop_back();
    h = reduce(h);
    if (h.is_zero()) continue;
    h = h.monic();

    const std::size_t id = elems_.size();
    const Word lead = h.leading_word();
    // Elements whose leading word contains the new one leave the basis and
    // are reduced again; the rest get their tails rewritten.
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!alive_[i]) continue;
      if (elems_[i].leading_word().contains(lead)) {
        alive_[i] = false;
        index_.erase(elems_[i].leading_word());
        total_terms_ -= elems_[i].size();
        work.push_back(std::move(elems_[i]));
        elems_[i] = Poly();
      }
    }
    total_terms_ += h.size();
    elems_.push_back(h);
    alive_.push_back(true);
    index_.insert(lead, id);

    for (std::size_t i = 0; i < id; ++i) {
      if (!alive_[i]) continue;
      const auto& terms = elems_[i].terms();
      bool touched = false;
      for (std::size_t k = 1; k < terms.size() && !touched; ++k) touched = terms[k].word.contains(lead);
      if (!touched) continue;
      Poly t = reduce(elems_[i].tail());
      total_terms_ -= elems_[i].size();
      elems_[i] = Poly(elems_[i].leading_word()) + t;
      total_terms_ += elems_[i].size();
    }

    std::vector<Obstruction> obs;
    for (std::size_t i = 0; i <= id; ++i) {
      if (!alive_[i]) continue;
      push_overlaps(elems_[id], id, elems_[i], i, obs);
      if (i != id) push_overlaps(elems_[i], i, elems_[id], id, obs);
    }
    for (const auto& ob : obs) {
      if (static_cast<int>(ob.degree) > bound_) {
        deferred_.push_back(ob);
      } else {
        queue_.push({ob});
      }
    }
    check_limits();
  }
}

void GroebnerEngine::run(int degree_bound) {
  if (degree_bound > bound_) {
    bound_ = degree_bound;
    std::vector<Obstruction> keep;
    for (const auto& ob : deferred_) {
      if (!alive_[ob.left] || !alive_[ob.right]) continue;
      if (static_cast<int>(ob.degree) <= bound_) {
        queue_.push({ob});
      } else {
        keep.push_back(ob);
      }
    }
    deferred_ = std::move(keep);
  }
  while (!queue_.empty()) {
    Obstruction ob = queue_.top().ob;
    queue_.pop();
    if (!alive_[ob.left] || !alive_[ob.right]) continue;
    ++processed_;
    Poly s = s_polynomial(elems_[ob.left], elems_[ob.right], ob.overlap);
    Poly h = reduce(s);
    if (!h.is_zero()) insert(std::move(h));
  }
}

bool GroebnerEngine::complete() const {
  return std::none_of(deferred_.begin(), deferred_.end(),
                      [&](const Obstruction& ob) { return alive_[ob.left] && alive_[ob.right]; });
}

std::size_t GroebnerEngine::size() const {
  return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
}

std::vector<Poly> GroebnerEngine::polys() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (alive_[i]) out.push_back(elems_[i]);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return deglex_less(a.leading_word().view(), b.leading_word().view());
  });
  return out;
}

GBasis GroebnerEngine::basis() const { return GBasis{polys(), order_, bound_, complete()}; }

Poly GroebnerEngine::reduce(const Poly& f) const {
  return reduce_with(f, index_, elems_, [](const Rational&, const Word&, std::size_t, const Word&) {});
}

Membership GroebnerEngine::member(const Poly& f) const {
  if (reduce(f).is_zero()) return Membership::Member;
  return complete() ? Membership::NonMember : Membership::Unknown;
}

GBasis complete(const std::vector<Poly>& generators, WordOrder order, int degree_bound, CompletionLimits limits) {
  for (const auto& g : generators)
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  GroebnerEngine engine(generators, limits, order);
  engine.run(degree_bound);
  return engine.basis();
}

Membership ideal_member(const Poly& f, const GBasis& basis) {
  if (normal_form(f, basis.polys, basis.order).is_zero()) return Membership::Member;
  return basis.complete ? Membership::NonMember : Membership::Unknown;
}

}  // namespace qsym

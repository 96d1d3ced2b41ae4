#include "qsym/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) s.push_back(i);
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (int j = i; !seen[j]; j = images_[j]) {
      if (j != i) out += ",";
      out += std::to_string(j + 1);
      seen[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.n()) return false;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.adjacent(i, j) != g.adjacent(p(i), p(j))) return false;
  return true;
}

AutGroup automorphism_group(const Graph& g) {
  const int n = g.n();
  if (n > 8) throw std::invalid_argument("automorphism_group supports at most 8 vertices");
  AutGroup group{n, {}};
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  // Extend a partial map vertex by vertex; an image must match the degree
  // and the adjacency to every vertex already mapped.
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      group.elements.emplace_back(img);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(img[u], w);
      if (!ok) continue;
      img[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

bool are_disjoint(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("permutation degree mismatch");
  for (int i = 0; i < s.degree(); ++i)
    if (s(i) != i && t(i) != i) return false;
  return true;
}

std::optional<std::pair<Permutation, Permutation>> find_disjoint_pair(const AutGroup& group) {
  const auto& el = group.elements;
  for (std::size_t a = 0; a < el.size(); ++a) {
    if (el[a].is_identity()) continue;
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      if (el[b].is_identity()) continue;
      if (are_disjoint(el[a], el[b])) return std::make_pair(el[a], el[b]);
    }
  }
  return std::nullopt;
}

}  // namespace qsym

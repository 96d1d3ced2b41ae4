#pragma once

// Classical automorphism groups as explicit element lists.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym {

// images[i] = sigma(i), 0-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // From 1-based disjoint cycles, e.g. {{1,3},{2,4}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  std::vector<int> support() const;

  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  // 1-based cycle notation, e.g. "(1,2)(3,4)"; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

struct AutGroup {
  int n = 0;
  std::vector<Permutation> elements;  // sorted by images, identity first
};

bool is_automorphism(const Graph& g, const Permutation& p);

// Backtracking over partial vertex maps; n <= 8.
AutGroup automorphism_group(const Graph& g);

inline std::size_t group_order(const AutGroup& group) { return group.elements.size(); }

bool are_disjoint(const Permutation& s, const Permutation& t);

// First pair (in element order) of non-identity, disjoint elements.
std::optional<std::pair<Permutation, Permutation>> find_disjoint_pair(const AutGroup& group);

}  // namespace qsym

#pragma once

// Finite simple undirected graphs on at most 16 vertices.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsym {

class GraphFormatError : public std::runtime_error {
public:
  enum class Kind {
    MalformedHeader,
    TruncatedPayload,
    VertexCountOutOfRange,
    BadCharacter,
    NonSquare,
    Asymmetric,
    NonzeroDiagonal,
  };

  GraphFormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class Graph {
public:
  static constexpr int kMaxVertices = 16;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  bool adjacent(int i, int j) const { return (rows_[i] >> j) & 1u; }
  std::uint16_t row(int i) const { return rows_[i]; }
  int degree(int i) const;
  int edge_count() const;

  // Undirected; rejects loops.
  void set_edge(int i, int j, bool present = true);

  // Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const;

  // Upper-triangle bits in graph6 order: columns j = 1..n-1, rows i < j.
  std::vector<bool> upper_triangle() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> rows_{};
};

// Walk counts; entries are exact.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
  static IntMatrix adjacency(const Graph& g);

  int n() const { return n_; }
  const mpz_class& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  mpz_class& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int n_ = 0;
  std::vector<mpz_class> entries_;
};

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Rows of 0/1 characters; whitespace inside and around rows is ignored.
Graph parse_adjacency(std::string_view text);
std::string to_adjacency(const Graph& g);

bool is_connected(const Graph& g);

IntMatrix matrix_power(const Graph& g, int l);

// Relabeling with the lexicographically smallest upper triangle (graph6 bit
// order). Brute force over all relabelings with prefix pruning; n <= 8.
Graph canonical_form(const Graph& g);

// One canonical representative per isomorphism class, ordered by edge count
// then by upper-triangle bits. n <= 8.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_connected(int n);

}  // namespace qsym

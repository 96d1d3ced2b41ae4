#include "qsym/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace qsym {
namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw GraphFormatError(GraphFormatError::Kind::VertexCountOutOfRange,
                           "vertex count " + std::to_string(n) + " outside 1.." +
                               std::to_string(Graph::kMaxVertices));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Column j of the upper triangle of g relabeled by perm, row 0 most significant.
std::uint32_t column_bits(const Graph& g, const std::vector<int>& perm, int j) {
  std::uint32_t bits = 0;
  for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
  return bits;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> perm;  // perm[new] = old
  std::vector<bool> used;
  std::vector<std::uint32_t> best;
  std::vector<int> best_perm;
  bool have_best = false;

  // Lexicographic comparison of cols[0..depth] against the best prefix.
  int cmp_prefix(const std::vector<std::uint32_t>& cols, int depth) const {
    for (int k = 0; k <= depth; ++k) {
      if (cols[k] != best[k]) return cols[k] < best[k] ? -1 : 1;
    }
    return 0;
  }

  void recurse(int depth, std::vector<std::uint32_t>& cols) {
    if (depth == n) {
      if (!have_best || cmp_prefix(cols, n - 1) < 0) {
        best = cols;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      perm[depth] = v;
      cols[depth] = column_bits(g, perm, depth);
      if (have_best && cmp_prefix(cols, depth) > 0) continue;
      used[v] = true;
      recurse(depth + 1, cols);
      used[v] = false;
    }
  }
};

bool graph_less(const Graph& a, const Graph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return a.upper_triangle() < b.upper_triangle();
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [i, j] : edges) set_edge(i, j);
}

void Graph::set_edge(int i, int j, bool present) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("vertex index out of range");
  if (i == j) throw std::invalid_argument("loops are not allowed");
  const auto bi = static_cast<std::uint16_t>(1u << i), bj = static_cast<std::uint16_t>(1u << j);
  if (present) {
    rows_[i] |= bj;
    rows_[j] |= bi;
  } else {
    rows_[i] &= static_cast<std::uint16_t>(~bj);
    rows_[j] &= static_cast<std::uint16_t>(~bi);
  }
}

int Graph::degree(int i) const { return std::popcount(rows_[i]); }

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += degree(i);
  return twice / 2;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.set_edge(perm[i], perm[j]);
  return out;
}

std::vector<bool> Graph::upper_triangle() const {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adjacent(i, j));
  return bits;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) m.at(i, j) = g.adjacent(i, j) ? 1 : 0;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < a.n_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw GraphFormatError(GraphFormatError::Kind::MalformedHeader, "empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126)
      throw GraphFormatError(GraphFormatError::Kind::BadCharacter,
                             std::string("invalid graph6 character '") + ch + "'");
  }
  if (text[0] == 126)
    throw GraphFormatError(GraphFormatError::Kind::VertexCountOutOfRange,
                           "graph6 multi-byte header: more than 62 vertices");
  const int n = text[0] - 63;
  check_order(n);
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  std::string_view payload = text.substr(1);
  if (payload.size() < nbytes)
    throw GraphFormatError(GraphFormatError::Kind::TruncatedPayload,
                           "graph6 payload has " + std::to_string(payload.size()) + " bytes, expected " +
                               std::to_string(nbytes));
  if (payload.size() > nbytes)
    throw GraphFormatError(GraphFormatError::Kind::MalformedHeader,
                           "graph6 payload longer than header allows");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = payload[k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.set_edge(i, j);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out(1, static_cast<char>(g.n() + 63));
  auto bits = g.upper_triangle();
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int byte = 0;
    for (std::size_t b = 0; b < 6; ++b) byte = (byte << 1) | (k + b < bits.size() && bits[k + b] ? 1 : 0);
    out.push_back(static_cast<char>(byte + 63));
  }
  return out;
}

Graph parse_adjacency(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string row;
    for (char ch : text.substr(start, end - start)) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch != '0' && ch != '1')
        throw GraphFormatError(GraphFormatError::Kind::BadCharacter,
                               std::string("invalid adjacency character '") + ch + "'");
      row.push_back(ch);
    }
    if (!row.empty()) rows.push_back(std::move(row));
    start = end + 1;
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw GraphFormatError(GraphFormatError::Kind::NonSquare, "empty adjacency matrix");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw GraphFormatError(GraphFormatError::Kind::NonSquare,
                             "adjacency matrix is not square: " + std::to_string(n) + " rows, a row of length " +
                                 std::to_string(r.size()));
  check_order(n);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i][i] != '0')
      throw GraphFormatError(GraphFormatError::Kind::NonzeroDiagonal,
                             "nonzero diagonal entry at vertex " + std::to_string(i + 1));
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw GraphFormatError(GraphFormatError::Kind::Asymmetric,
                               "asymmetric entries at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (rows[i][j] == '1') g.set_edge(i, j);
    }
  }
  return g;
}

std::string to_adjacency(const Graph& g) {
  std::string out;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) out.push_back(g.adjacent(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n(); ++v)
      if ((frontier >> v) & 1u) next |= g.row(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n();
}

IntMatrix matrix_power(const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("matrix power exponent must be positive");
  IntMatrix base = IntMatrix::adjacency(g);
  IntMatrix result = base;
  for (int k = 1; k < l; ++k) result = result * base;
  return result;
}

Graph canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > 8) throw std::invalid_argument("canonical_form is brute force and limited to 8 vertices");
  CanonSearch s{g, n, std::vector<int>(n), std::vector<bool>(n, false), {}, {}, false};
  std::vector<std::uint32_t> cols(n, 0);
  s.recurse(0, cols);
  // best_perm[new] = old; permuted() wants old -> new.
  std::vector<int> inv(n);
  for (int k = 0; k < n; ++k) inv[s.best_perm[k]] = k;
  return g.permuted(inv);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1..8 vertices");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::vector<bool>> seen;
    std::vector<Graph> next;
    for (const Graph& h : level) {
      for (std::uint32_t nbrs = 0; nbrs < (1u << (m - 1)); ++nbrs) {
        Graph g(m);
        for (int i = 0; i < m - 1; ++i)
          for (int j = i + 1; j < m - 1; ++j)
            if (h.adjacent(i, j)) g.set_edge(i, j);
        for (int i = 0; i < m - 1; ++i)
          if ((nbrs >> i) & 1u) g.set_edge(i, m - 1);
        Graph c = canonical_form(g);
        if (seen.insert(c.upper_triangle()).second) next.push_back(c);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), graph_less);
  return level;
}

std::vector<Graph> enumerate_connected(int n) {
  auto all = enumerate_graphs(n);
  std::vector<Graph> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Graph& g) { return is_connected(g); });
  return out;
}

}  // namespace qsym

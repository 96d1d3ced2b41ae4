#include "qsym/fulton.hpp"

#include <stdexcept>

namespace qsym {

ZeroPattern zero_pattern(const Graph& g, int max_power) {
  const int n = g.n();
  if (max_power <= 0) max_power = n * n;
  ZeroPattern p{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)), 0};
  const int pairs = n * (n - 1) / 2;
  int forced = 0;
  const IntMatrix base = IntMatrix::adjacency(g);
  IntMatrix power = base;
  for (int l = 1; l <= max_power && forced < pairs; ++l) {
    if (l > 1) power = power * base;
    p.max_power_used = l;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (p.forced_zero[i][j] || power.at(i, i) == power.at(j, j)) continue;
        p.forced_zero[i][j] = p.forced_zero[j][i] = true;
        ++forced;
      }
  }
  return p;
}

bool is_identity_forced(const ZeroPattern& p) {
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && !p.forced_zero[i][j]) return false;
  return true;
}

std::string render_pattern(const ZeroPattern& p) {
  std::string out;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (j) out += ' ';
      if (p.forced_zero[i][j])
        out += '0';
      else if (p.n < 10)
        out += "u_" + std::to_string(i + 1) + std::to_string(j + 1);
      else
        out += "u_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qsym

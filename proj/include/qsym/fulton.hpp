#pragma once

// Generators u(i,j) forced to zero because vertices i and j see different
// numbers of closed walks of some length.

#include <string>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym {

struct ZeroPattern {
  int n = 0;
  std::vector<std::vector<bool>> forced_zero;
  // Highest power actually computed (early exit may stop below the cap).
  int max_power_used = 0;

  bool forced(int i, int j) const { return forced_zero[i][j]; }
};

// max_power <= 0 selects the default cap n^2.
ZeroPattern zero_pattern(const Graph& g, int max_power = 0);

bool is_identity_forced(const ZeroPattern& p);

// Partially specified u-matrix, 1-based: "0" for forced entries, "u_ij" otherwise.
std::string render_pattern(const ZeroPattern& p);

}  // namespace qsym

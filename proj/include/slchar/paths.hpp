#pragma once

#include "slchar/states.hpp"

namespace slchar {

/// One lattice configuration (a; b) with a0 = i, b0 = 0 and the implicit
/// boundary values b_{-1} = l, b_inf = k, a entries zero beyond the support.
struct PathConfig {
  int k = 0, l = 0, i = 0;
  std::vector<int> a;  // a[0] = i
  std::vector<int> b;  // b[0] = 0
};

/// Check the defining inequalities.  Throws InvalidConfig when the fixed
/// boundary entries are malformed.
bool is_admissible(const std::vector<int>& a, const std::vector<int>& b, int k,
                   int l, int i);

Monomial path_weight(const PathConfig& c);

/// All admissible configurations with q-degree sum_{j>=1} j(a_j+b_j) <= qmax.
std::vector<std::pair<PathConfig, Monomial>> enumerate_configs(int k, int l,
                                                               int i, int qmax);

/// Brute-force chi_{i,l} as the weighted count of lattice points.
TruncatedSeries oracle_character(int k, int l, int i, TruncationPolicy policy);

/// chi_l(q, z) = sum_i chi_{i,l}(q, z, z^{-1}); the z-degree rides in the z1
/// slot of the series.
TruncatedSeries full_character(int k, int l, TruncationPolicy policy);

}  // namespace slchar

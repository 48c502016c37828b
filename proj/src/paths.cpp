#include "slchar/paths.hpp"

#include <algorithm>

namespace slchar {

namespace {

int at(const std::vector<int>& v, int j) {
  return j >= 0 && j < static_cast<int>(v.size()) ? v[j] : 0;
}

}  // namespace

bool is_admissible(const std::vector<int>& a, const std::vector<int>& b, int k,
                   int l, int i) {
  if (a.empty() || b.empty() || a[0] != i || b[0] != 0)
    throw InvalidConfig("boundary entries must be a0 = i, b0 = 0");
  for (int x : a)
    if (x < 0) throw InvalidConfig("negative entry");
  for (int x : b)
    if (x < 0) throw InvalidConfig("negative entry");

  int r_max = std::max(a.size(), b.size()) - 1;

  // Pairwise constraints; at r = r_max the entries beyond the support are 0,
  // so these also cover all larger r.
  for (int r = 0; r <= r_max; ++r) {
    if (at(a, r) + at(b, r + 1) + at(a, r + 1) > k) return false;
    if (at(b, r) + at(a, r) + at(b, r + 1) > k) return false;
  }

  auto sum = [&](const std::vector<int>& v, int lo, int hi) {
    int s = 0;
    for (int j = std::max(lo, 0); j <= std::min(hi, r_max); ++j) s += at(v, j);
    return s;
  };
  auto b_sum = [&](int lo, int hi) {
    // includes the boundary value b_{-1} = l
    return sum(b, lo, hi) + (lo <= -1 && hi >= -1 ? l : 0);
  };

  // Interval constraints for finite n.  Entries beyond the support vanish, so
  // n > r_max + 2 only weakens both sides relative to n = r_max + 2 (the b-sum
  // is unchanged while the a-sum can only grow); checking up to r_max + 2 is
  // exhaustive.
  for (int m = -1; m <= r_max + 1; ++m)
    for (int n = m + 1; n <= r_max + 2; ++n)
      if (b_sum(m, n) > k + sum(a, m + 1, n - 2)) return false;

  // n = infinity: the boundary b_inf = k on the left cancels the k on the
  // right, leaving sum_{s=m}^{R} b_s <= sum_{s=m+1}^{R} a_s.
  for (int m = -1; m <= r_max; ++m)
    if (b_sum(m, r_max) > sum(a, m + 1, r_max)) return false;

  return true;
}

Monomial path_weight(const PathConfig& c) {
  int dq = 0, dz1 = 0, dz2 = 0;
  int r_max = std::max(c.a.size(), c.b.size()) - 1;
  for (int j = 0; j <= r_max; ++j) {
    int aj = at(c.a, j), bj = at(c.b, j);
    dq += j * (aj + bj);
    dz1 += bj;
    dz2 += aj + bj;
  }
  return Monomial::of(dq, dz1, dz2);
}

std::vector<std::pair<PathConfig, Monomial>> enumerate_configs(int k, int l,
                                                               int i,
                                                               int qmax) {
  std::vector<std::pair<PathConfig, Monomial>> out;
  PathConfig cfg;
  cfg.k = k;
  cfg.l = l;
  cfg.i = i;
  cfg.a.assign(qmax + 1, 0);
  cfg.b.assign(qmax + 1, 0);
  cfg.a[0] = i;

  // Depth-first over the index j, spending the q-degree budget j(a_j + b_j);
  // the pairwise constraints at r = j-1 prune most branches early, and the
  // interval constraints are checked once per leaf.
  auto rec = [&](auto&& self, int j, int budget) -> void {
    if (j > qmax || budget == 0) {
      if (is_admissible(cfg.a, cfg.b, k, l, i))
        out.emplace_back(cfg, path_weight(cfg));
      return;
    }
    for (int aj = 0; aj * j <= budget; ++aj) {
      for (int bj = 0; (aj + bj) * j <= budget; ++bj) {
        if (cfg.a[j - 1] + bj + aj > k) continue;
        if (cfg.b[j - 1] + cfg.a[j - 1] + bj > k) break;
        cfg.a[j] = aj;
        cfg.b[j] = bj;
        self(self, j + 1, budget - (aj + bj) * j);
      }
    }
    cfg.a[j] = 0;
    cfg.b[j] = 0;
  };
  rec(rec, 1, qmax);
  return out;
}

TruncatedSeries oracle_character(int k, int l, int i, TruncationPolicy policy) {
  if (!(0 <= i && i <= l && l <= k)) throw InvalidConfig("state out of range");
  TruncatedSeries out(policy);
  for (const auto& [cfg, w] : enumerate_configs(k, l, i, policy.qmax))
    out.add_term(w.q, w.z1, w.z2, 1);
  return out;
}

TruncatedSeries full_character(int k, int l, TruncationPolicy policy) {
  TruncationPolicy flat{policy.qmax, std::nullopt, std::nullopt};
  TruncatedSeries out(flat);
  for (int i = 0; i <= l; ++i)
    out += oracle_character(k, l, i, policy).substitute_z();
  return out;
}

}  // namespace slchar

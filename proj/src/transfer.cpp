#include "slchar/transfer.hpp"

namespace slchar {

Monomial transfer_entry(int k, StateIndex row, StateIndex col) {
  int i = row.i, l = row.l, ip = col.i, lp = col.l;
  if (l - i <= ip && ip <= lp && lp <= k - i) {
    int e = lp - ip;
    return Monomial::of(e, e, e + i);
  }
  if (ip < l - i && l - i <= lp && lp <= k - i) {
    int e = lp - l + i;
    return Monomial::of(e, e, e + i);
  }
  return Monomial::zero();
}

TransferMatrix build_matrix(int k) {
  TransferMatrix m;
  m.k = k;
  auto states = all_states(k);
  m.entry.resize(states.size());
  for (size_t r = 0; r < states.size(); ++r) {
    m.entry[r].reserve(states.size());
    for (size_t c = 0; c < states.size(); ++c)
      m.entry[r].push_back(transfer_entry(k, states[r], states[c]));
  }
  return m;
}

CharacterVector initial_character(int k, TruncationPolicy policy) {
  CharacterVector v = CharacterVector::zero(k, policy);
  v.at(0, 0).add_term(0, 0, 0, 1);
  return v;
}

CharacterVector transfer_step(const TransferMatrix& m,
                              const CharacterVector& v) {
  int k = m.k;
  CharacterVector out = CharacterVector::zero(k, v.policy());
  auto states = all_states(k);
  std::vector<TruncatedSeries> shifted;
  shifted.reserve(states.size());
  for (const auto& s : v.comp) shifted.push_back(s.shift_z2());
  for (size_t r = 0; r < states.size(); ++r)
    for (size_t c = 0; c < states.size(); ++c) {
      const Monomial& e = m.entry[r][c];
      if (!e.is_zero()) out.comp[r] += shifted[c].times(e);
    }
  return out;
}

CharacterVector recursion_character(int k, int n, TruncationPolicy policy) {
  TransferMatrix m = build_matrix(k);
  CharacterVector v = initial_character(k, policy);
  for (int step = 0; step < n; ++step) v = transfer_step(m, v);
  return v;
}

CharacterVector limit_character(int k, TruncationPolicy policy) {
  TransferMatrix m = build_matrix(k);
  CharacterVector v = initial_character(k, policy);
  for (int step = 0; step < policy.qmax + 1; ++step) v = transfer_step(m, v);
  CharacterVector next = transfer_step(m, v);
  if (!(next == v))
    throw StabilizationFailure("iterates " + std::to_string(policy.qmax + 1) +
                               " and " + std::to_string(policy.qmax + 2) +
                               " differ");
  return next;
}

CharacterVector fixed_point_character(int k, TruncationPolicy policy) {
  if (!policy.z2max)
    throw InvalidConfig("fixed-point solver needs a z2 window");
  int z2max = *policy.z2max;
  TransferMatrix m = build_matrix(k);
  auto states = all_states(k);
  size_t dim = states.size();

  // Grade by z2-degree: chi = sum_n z2^n f_n with f_n a vector of series in
  // (q, z1).  The shift S contributes q^n on the degree-n slice, and a matrix
  // entry of z2-degree d couples f_n to f_{n-d}:
  //   f_n = q^n M(0) f_n + g_n,   g_n = sum_{d>=1} strip(entry) q^{n-d} f_{n-d}
  // For n >= 1 the first term raises the q-degree, so (Id - q^n M(0)) inverts
  // as a finite geometric series within the q window.
  TruncationPolicy flat{policy.qmax, std::nullopt, std::nullopt};
  std::vector<std::vector<TruncatedSeries>> f;
  f.push_back(std::vector<TruncatedSeries>(dim, TruncatedSeries::zero(flat)));
  f[0][0].add_term(0, 0, 0, 1);  // chi(q, z1, 0) = delta at (0,0)

  for (int n = 1; n <= z2max; ++n) {
    std::vector<TruncatedSeries> g(dim, TruncatedSeries::zero(flat));
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        const Monomial& e = m.entry[r][c];
        if (e.is_zero() || e.z2 == 0) continue;
        int d = e.z2;
        if (d > n) continue;
        g[r] += f[n - d][c].times(Monomial::of(e.q + n - d, e.z1, 0));
      }
    std::vector<TruncatedSeries> fn = g;
    std::vector<TruncatedSeries> power = g;  // (q^n M0)^tau g
    for (int tau = 1; tau * n <= policy.qmax; ++tau) {
      std::vector<TruncatedSeries> next(dim, TruncatedSeries::zero(flat));
      for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
          const Monomial& e = m.entry[r][c];
          if (e.is_zero() || e.z2 != 0) continue;
          next[r] += power[c].times(Monomial::of(n));
        }
      power = std::move(next);
      for (size_t r = 0; r < dim; ++r) fn[r] += power[r];
    }
    f.push_back(std::move(fn));
  }

  CharacterVector out = CharacterVector::zero(k, policy);
  for (int n = 0; n <= z2max; ++n)
    for (size_t r = 0; r < dim; ++r)
      for (const auto& [key, c] : f[n][r].terms())
        out.comp[r].add_term(key[0], key[1], n, c);
  return out;
}

}  // namespace slchar

#pragma once

#include <compare>
#include <vector>

#include "slchar/series.hpp"

namespace slchar {

/// Index (i, l) with 0 <= i <= l <= k; there are (k+1)(k+2)/2 of them.
struct StateIndex {
  int i = 0;
  int l = 0;

  friend bool operator==(const StateIndex&, const StateIndex&) = default;
};

/// All states in output order: lexicographic in (l, i), i.e. (0,0), (0,1),
/// (1,1), (0,2), ...
inline std::vector<StateIndex> all_states(int k) {
  std::vector<StateIndex> out;
  out.reserve((k + 1) * (k + 2) / 2);
  for (int l = 0; l <= k; ++l)
    for (int i = 0; i <= l; ++i) out.push_back({i, l});
  return out;
}

inline int state_rank(int k, StateIndex s) {
  (void)k;
  return s.l * (s.l + 1) / 2 + s.i;
}

/// One truncated series per state, all sharing a policy.
struct CharacterVector {
  int k = 0;
  std::vector<TruncatedSeries> comp;  // indexed by state_rank

  static CharacterVector zero(int k, TruncationPolicy policy) {
    CharacterVector v;
    v.k = k;
    v.comp.assign((k + 1) * (k + 2) / 2, TruncatedSeries::zero(policy));
    return v;
  }

  TruncatedSeries& at(StateIndex s) { return comp[state_rank(k, s)]; }
  const TruncatedSeries& at(StateIndex s) const {
    return comp[state_rank(k, s)];
  }
  TruncatedSeries& at(int i, int l) { return at(StateIndex{i, l}); }
  const TruncatedSeries& at(int i, int l) const { return at(StateIndex{i, l}); }

  const TruncationPolicy& policy() const { return comp.at(0).policy(); }

  friend bool operator==(const CharacterVector&,
                         const CharacterVector&) = default;
};

}  // namespace slchar

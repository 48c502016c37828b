#pragma once

#include "slchar/states.hpp"

namespace slchar {

/// Monomial-valued square matrix over the states; zero entries are stored as
/// the zero monomial.
struct TransferMatrix {
  int k = 0;
  std::vector<std::vector<Monomial>> entry;  // [row rank][column rank]

  const Monomial& at(StateIndex row, StateIndex col) const {
    return entry[state_rank(k, row)][state_rank(k, col)];
  }
};

/// Entry (i,l) -> (i',l'): (q z1 z2)^{l'-i'} z2^i on the triangular region
/// l-i <= i' <= l' <= k-i, and (q z1 z2)^{l'-l+i} z2^i on the rectangle
/// i' < l-i <= l' <= k-i; zero elsewhere.
Monomial transfer_entry(int k, StateIndex row, StateIndex col);

TransferMatrix build_matrix(int k);

/// The delta vector at (0,0), the recursion seed.
CharacterVector initial_character(int k, TruncationPolicy policy);

/// v |-> M * S(v) with S the q-shift in z2.
CharacterVector transfer_step(const TransferMatrix& m,
                              const CharacterVector& v);

CharacterVector recursion_character(int k, int n, TruncationPolicy policy);

/// Stationary value of the recursion within the truncation window, certified
/// by agreement of two consecutive iterates.
CharacterVector limit_character(int k, TruncationPolicy policy);

/// Direct order-by-order solution of the difference equation in z2-degree,
/// inverting (Id - q^n M(0)) by a truncated geometric series.  Requires a
/// z2max window.
CharacterVector fixed_point_character(int k, TruncationPolicy policy);

}  // namespace slchar

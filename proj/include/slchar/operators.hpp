#pragma once

#include <array>

#include "slchar/factored.hpp"
#include "slchar/states.hpp"
#include "slchar/word.hpp"

namespace slchar {

/// The five extremal operators plus the four auxiliary vertex splittings
/// B = B1 + B2, D = D1 + D2.
enum class VertexOp { A, B, C, D, E, B1, B2, D1, D2 };

VertexOp to_vertex_op(Letter g);

/// f [P,Q,R]: scalar times the vector with (i,l)-component P^{k-l}Q^{l-i}R^i.
/// limit_group links vectors whose scalars must be summed exactly before the
/// deformation parameter t is sent to 1 (grouped steps rescued by
/// deformation); -1 means none.
struct SimpleVector {
  FactoredRational scalar;
  std::array<Monomial, 3> part{Monomial::one(), Monomial::one(),
                               Monomial::one()};
  int limit_group = -1;
  int deform_round = 0;

  bool is_zero() const { return scalar.is_zero(); }

  static SimpleVector bracket(const Monomial& p, const Monomial& q,
                              const Monomial& r) {
    SimpleVector v;
    v.scalar = FactoredRational::from_monomial(Monomial::one());
    v.part = {p, q, r};
    return v;
  }
};

using VectorSum = std::vector<SimpleVector>;

/// Apply one operator.  Throws UndefinedOperator when a denominator factor
/// is exactly 1 (with no deformation content) or has no expansion direction.
SimpleVector apply_letter(VertexOp g, const SimpleVector& v);

/// Apply a word, rightmost step first.  When a letter of a grouped step is
/// singular on a vector, the whole step is retried on a t-deformed copy and
/// the outputs share a limit group; a singular single-letter step makes the
/// word undefined.
VectorSum apply_word(const OperatorWord& w, VectorSum state);

/// Scalar f_n of the tail vector.
FactoredRational v_infinity_scalar(int n);

/// v_inf = sum_n f_n [1, q^n z2, z2], cut off at the first n whose q^{n(n-1)/2}
/// prefactor exceeds the truncation window.
VectorSum v_infinity(TruncationPolicy policy);

/// scalar * P^{k-l} Q^{l-i} R^i as a factored rational (zero when a zero
/// component is raised to a positive power).
FactoredRational component_scalar(const SimpleVector& v, int k, int i, int l);

/// Expand a vector sum into per-state series.  Limit groups are summed as
/// factored rationals and resolved at t = 1 before expansion.
CharacterVector to_character(const VectorSum& vs, int k,
                             TruncationPolicy policy);

/// M * S(v) == (A+B+C+D+E) v on the given simple vector, within the policy.
bool pentagon_check(const SimpleVector& v, int k, TruncationPolicy policy);

}  // namespace slchar

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slchar/factored.hpp"
#include "slchar/states.hpp"
#include "slchar/word.hpp"

namespace slchar {

enum QuadId { kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3 };

/// Doubled value of one of the quadratic exponent forms; gamma and delta have
/// half-integer coefficients, so everything is carried times 2.
long long quad_form2(QuadId id, int n, int m, int s);

/// Linear expression in (n, m, s) with half-integer coefficients, plus
/// optional quadratic-form symbols (always with multiplicity here).
struct LinExpr {
  long long c2[4]{0, 0, 0, 0};  // doubled coefficients: const, n, m, s
  int quad[4]{0, 0, 0, 0};

  long long eval2(int n, int m, int s) const;
  /// Exact integer value; FormulaTranscriptionError when half-integral.
  long long eval_int(int n, int m, int s) const;
};

/// Parse e.g. "gamma-17/2n-1/2m-7/2s+2", "alpha+m", "2n+2s", "-1".
LinExpr parse_lin_expr(const std::string& text);

/// Product of q, z1, z2 powers with LinExpr exponents.
struct MonomialTemplate {
  LinExpr q, z1, z2;
  Monomial eval(int n, int m, int s) const;
};

struct PochTemplate {
  MonomialTemplate base;
  std::optional<LinExpr> len;  // nullopt: infinite product
  int sign = 1;                // +1 numerator, -1 denominator
};

/// One closed-form display block: the word shape on the left and the fully
/// factored right-hand side, with the vector part [x (1 : v2 : v3)].
struct FamilyRecord {
  int id = 0;
  std::string shape;
  int nmin = 0, mmin = 0, smin = 0;
  LinExpr sign_exp;  // exponent of (-1)
  MonomialTemplate pre, x, v2, v3;
  std::vector<PochTemplate> poch;
  std::vector<MonomialTemplate> numlin;  // bare numerator factors (1 - mono)

  bool in_domain(int n, int m, int s) const {
    return n >= nmin && m >= mmin && s >= smin;
  }
};

/// The 18 records, loaded once from the repository data table.
const std::vector<FamilyRecord>& family_table();

/// Build the word of a shape string like "D^{3n-2} A^{m} B L^{s}" at
/// concrete (n, m, s); exponents must evaluate to non-negative integers.
OperatorWord instantiate_shape(const std::string& shape, int n, int m, int s);

/// sign * pre * Pochhammer and linear factors, without the vector part.
FactoredRational family_scalar(const FamilyRecord& f, int n, int m, int s);

/// Every linear factor base must be one of q^a, q^a z1^{-1}, q^a z2,
/// q^a z1 z2, q^a z1 z2^2 (up to the canonical direction); anything else is a
/// transcription bug.
void assert_linear_factor_shapes(const FactoredRational& f);

CharacterVector family_term_closed(int fid, int n, int m, int s, int k,
                                   TruncationPolicy policy);
CharacterVector family_term_operator(int fid, int n, int m, int s, int k,
                                     TruncationPolicy policy);

enum class Route { Closed, Operator };

/// The full summation over all 18 families and parameter shells
/// n + m + s = 0, 1, 2, ... until nothing reaches the q window.
CharacterVector bosonic_sum_character(int k, TruncationPolicy policy,
                                       Route route = Route::Closed);

/// (q)_inf / ((qx)_inf (qy)_inf) against its single-sum expansion.
bool jackson_check(const Monomial& x, const Monomial& y,
                   TruncationPolicy policy);

/// The 36 pair identities: 0..8 leading A, 9..17 leading C, 18..26 leading B,
/// 27..35 leading E.  Shapes are parametrized by (n, m, s) >= 0.
std::pair<std::string, std::string> cancellation_pair(int pid);

/// True iff the pair sums to zero on v_inf within the policy.
bool cancellation_check(int pid, int n, int m, int s, int k,
                        TruncationPolicy policy);

/// True iff the word annihilates v_inf within the policy.
bool word_kills_v_infinity(const std::string& word, int k,
                           TruncationPolicy policy);

/// The closed form of A^n B (A+B)^m [1,0,z2] against direct application.
bool anb_closed_form_check(int n, int m, int k, TruncationPolicy policy);

}  // namespace slchar

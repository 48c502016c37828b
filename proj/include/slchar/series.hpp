#pragma once

#include <array>
#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "slchar/monomial.hpp"

namespace slchar {

using Coeff = boost::multiprecision::cpp_int;

/// Working quotient of the ring of formal Laurent series: terms with
/// q-exponent above qmax are dropped, and optionally terms with z1-exponent
/// below z1min or z2-exponent above z2max.  The windows are only needed when
/// an expansion would otherwise have infinitely many terms at a fixed
/// q-degree.
struct TruncationPolicy {
  int qmax = 0;
  std::optional<int> z1min;
  std::optional<int> z2max;

  bool admits(int q, int z1, int z2) const {
    if (q > qmax) return false;
    if (z1min && z1 < *z1min) return false;
    if (z2max && z2 > *z2max) return false;
    return true;
  }

  /// Widened policy used while multiplying factors that later lose q / z2 or
  /// gain z1 through a negative-exponent prefactor.
  TruncationPolicy relaxed(int dq, int dz1, int dz2) const {
    TruncationPolicy p = *this;
    p.qmax += dq;
    if (p.z1min) *p.z1min -= dz1;
    if (p.z2max) *p.z2max += dz2;
    return p;
  }

  friend bool operator==(const TruncationPolicy&,
                         const TruncationPolicy&) = default;
};

/// Sparse truncated Laurent series in (q, z1, z2) with exact integer
/// coefficients.  Stored terms always satisfy the policy and are nonzero.
class TruncatedSeries {
 public:
  using Key = std::array<int, 3>;  // q, z1, z2 exponents
  using Terms = std::map<Key, Coeff>;

  explicit TruncatedSeries(TruncationPolicy policy) : policy_(policy) {}

  static TruncatedSeries zero(TruncationPolicy policy) {
    return TruncatedSeries(policy);
  }
  static TruncatedSeries one(TruncationPolicy policy);
  static TruncatedSeries from_monomial(const Monomial& m,
                                       TruncationPolicy policy,
                                       const Coeff& c = 1);

  const TruncationPolicy& policy() const { return policy_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int q, int z1, int z2, const Coeff& c);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a -= b;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

  TruncatedSeries times(const Monomial& m, const Coeff& c = 1) const;
  TruncatedSeries negated() const;

  /// Every term q^a z1^b z2^c becomes q^{a+c} z1^b z2^c.
  TruncatedSeries shift_z2() const;

  /// z1 -> z, z2 -> z^{-1}; the result lives in (q, z) with the z-degree in
  /// the z1 slot.  Windows are dropped.
  TruncatedSeries substitute_z() const;

  Coeff coeff_at(int q, int z1, int z2) const;

  /// Copy truncated to a (tighter or equal) policy.
  TruncatedSeries truncated_to(TruncationPolicy policy) const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

  std::string str() const;

 private:
  TruncationPolicy policy_;
  Terms terms_;
};

/// Expansion of 1/(1 - X) in the direction dictated by classify(X).
/// X = 0 gives 1 and X = infinity gives 0 (the limit of the Large-direction
/// expansion); Unit and Indeterminate monomials are rejected.
TruncatedSeries inv_one_minus(const Monomial& x, TruncationPolicy policy);

/// prod_{j=0}^{len-1} (1 - q^j X)^{sign}; len = nullopt means the infinite
/// product, which requires X Small with q-exponent >= 0.
TruncatedSeries pochhammer(const Monomial& x, std::optional<int> len, int sign,
                           TruncationPolicy policy);

/// sum_{a<=n<=m<=b} x^m y^n against its three-corner bosonic form, a <= b.
bool triangle_lemma_check(const Monomial& x, const Monomial& y, int a, int b,
                          TruncationPolicy policy);

/// sum_{a<=m<=b, c<=n<=d} x^m y^n against its four-corner bosonic form,
/// a <= b + 1 and c <= d + 1 (either range may be empty).
bool rectangle_lemma_check(const Monomial& x, const Monomial& y, int a, int b,
                           int c, int d, TruncationPolicy policy);

}  // namespace slchar

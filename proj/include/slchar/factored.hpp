#pragma once

#include <map>
#include <optional>

#include "slchar/series.hpp"

namespace slchar {

/// Exact Laurent polynomial in (q, z1, z2, t): finite sum of monomials with
/// integer coefficients.  Unlike TruncatedSeries, nothing is ever dropped.
struct Poly {
  std::map<Monomial, Coeff> terms;

  static Poly from_monomial(const Monomial& m, const Coeff& c = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Coeff& c);

  Poly& operator+=(const Poly& rhs);
  Poly times(const Monomial& m, const Coeff& c = 1) const;
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str() const;
};

/// Exact quotient p / (1 - m), or nullopt when the division leaves a
/// remainder.  Works for any finite m != 1, including monomials involving t.
std::optional<Poly> divide_by_one_minus(const Poly& p, const Monomial& m);

/// numer * prod_m (1 - m)^lin[m] * prod_m (m; q)_inf^inf[m].
///
/// Linear factor bases are kept in a canonical direction using
/// (1 - m) = (-m)(1 - m^{-1}): the stored base is the one that expands in
/// non-negative powers (Small), with pure powers of the deformation variable
/// t stored with a positive exponent.  Infinite-product bases are kept with
/// non-negative q-exponent by peeling (x)_inf = (1 - x)(qx)_inf.
struct FactoredRational {
  Poly numer;
  std::map<Monomial, int> lin;
  std::map<Monomial, int> inf;

  static FactoredRational zero() { return {}; }
  static FactoredRational from_monomial(const Monomial& m, const Coeff& c = 1);

  bool is_zero() const { return numer.is_zero(); }

  void mul_mono(const Monomial& m, const Coeff& c = 1);
  /// Multiply by (1 - m)^e.  m = 0 is a no-op; m = 1 annihilates (e > 0) or
  /// throws DivisionByVanishingFactor (e < 0).
  void mul_lin(Monomial m, int e);
  /// Multiply by (m; q)_inf^e.
  void mul_inf(Monomial m, int e);
  void mul(const FactoredRational& rhs);
  void negate();

  /// The substitution q^a z1^b z2^c -> q^{a+c} z1^b z2^c applied to every
  /// monomial (a ring homomorphism, so it distributes over the factors).
  FactoredRational shifted() const;

  friend bool operator==(const FactoredRational&,
                         const FactoredRational&) = default;

  std::string str() const;
};

/// Exact sum.  Infinite products are first aligned within each orbit
/// {q^j x : j} via (x)_inf = (1 - x)(qx)_inf; after that both summands must
/// carry the same infinite-product content up to shared factors, or the sum
/// has no representation in this form and an Error is thrown.
FactoredRational fr_add(const FactoredRational& a, const FactoredRational& b);

/// Take the deformation parameter t -> 1.  Denominator factors (1 - t^d)
/// must divide the numerator exactly; a surviving numerator factor
/// (1 - t^d) sends the whole expression to zero.
FactoredRational resolve_t(FactoredRational f);

/// Expand to a truncated series.  Intermediate products are carried in a
/// widened truncation window sized from the factors that can lower q or z2
/// or raise z1, so the result is exact within `policy`.
TruncatedSeries fr_to_series(const FactoredRational& f, TruncationPolicy policy);

}  // namespace slchar

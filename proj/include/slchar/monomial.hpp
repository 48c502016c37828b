#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "slchar/errors.hpp"

namespace slchar {

/// Monomial q^a z1^b z2^c (t is an internal deformation variable used by the
/// operator calculus to resolve grouped-step limits; it is always 0 in
/// user-facing values).  Besides ordinary finite monomials there is a first
/// class zero element, absorbing under multiplication, and its formal inverse
/// "infinite", which only ever appears transiently in quotients of vector
/// part components.
struct Monomial {
  enum class Kind : std::uint8_t { Zero, Finite, Infinite };

  Kind kind = Kind::Finite;
  int q = 0;
  int z1 = 0;
  int z2 = 0;
  int t = 0;

  static Monomial one() { return {}; }
  static Monomial zero() { return {Kind::Zero, 0, 0, 0, 0}; }
  static Monomial infinite() { return {Kind::Infinite, 0, 0, 0, 0}; }
  static Monomial of(int q, int z1 = 0, int z2 = 0) {
    return {Kind::Finite, q, z1, z2, 0};
  }

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_one() const {
    return kind == Kind::Finite && q == 0 && z1 == 0 && z2 == 0 && t == 0;
  }
  bool has_t() const { return kind == Kind::Finite && t != 0; }

  Monomial inv() const {
    switch (kind) {
      case Kind::Zero:
        return infinite();
      case Kind::Infinite:
        return zero();
      default:
        return {Kind::Finite, -q, -z1, -z2, -t};
    }
  }

  Monomial pow(int e) const;

  /// q-shift in z2: S(q^a z1^b z2^c) = q^{a+c} z1^b z2^c.
  Monomial shifted() const {
    if (!is_finite()) return *this;
    return {Kind::Finite, q + z2, z1, z2, t};
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&,
                                          const Monomial&) = default;

  std::string str() const;
};

Monomial mono_div(const Monomial& a, const Monomial& b);

/// Expansion-direction class of a nonzero monomial X (t must be 0):
///   Small: 1/(1-X) expands in non-negative powers of X,
///   Large: in non-negative powers of X^{-1},
///   Unit:  X = 1, expansion impossible,
///   Indeterminate: mixed q/z2 signs, no direction is sanctioned.
enum class MonomialClass { Small, Large, Unit, Indeterminate };

MonomialClass classify(const Monomial& x);

const char* to_string(MonomialClass c);

}  // namespace slchar

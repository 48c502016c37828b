#include "slchar/monomial.hpp"

#include <sstream>

namespace slchar {

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_infinite() || b.is_infinite())
      throw Error("monomial product 0 * infinity");
    return Monomial::zero();
  }
  if (a.is_infinite() || b.is_infinite()) return Monomial::infinite();
  return {Monomial::Kind::Finite, a.q + b.q, a.z1 + b.z1, a.z2 + b.z2,
          a.t + b.t};
}

Monomial Monomial::pow(int e) const {
  if (is_zero()) {
    if (e > 0) return zero();
    if (e == 0) return one();
    return infinite();
  }
  if (is_infinite()) {
    if (e > 0) return infinite();
    if (e == 0) return one();
    return zero();
  }
  return {Kind::Finite, q * e, z1 * e, z2 * e, t * e};
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error("monomial quotient 0 / 0");
  return a * b.inv();
}

MonomialClass classify(const Monomial& x) {
  if (!x.is_finite()) throw Error("classify: monomial not finite");
  if (x.t != 0) throw Error("classify: deformation variable not eliminated");
  if (x.is_one()) return MonomialClass::Unit;
  auto small = [](const Monomial& m) {
    return (m.q >= 0 && m.z2 >= 0 && m.q + m.z2 > 0) ||
           (m.q == 0 && m.z2 == 0 && m.z1 < 0);
  };
  if (small(x)) return MonomialClass::Small;
  if (small(x.inv())) return MonomialClass::Large;
  return MonomialClass::Indeterminate;
}

const char* to_string(MonomialClass c) {
  switch (c) {
    case MonomialClass::Small:
      return "Small";
    case MonomialClass::Large:
      return "Large";
    case MonomialClass::Unit:
      return "Unit";
    default:
      return "Indeterminate";
  }
}

std::string Monomial::str() const {
  if (is_zero()) return "0";
  if (is_infinite()) return "inf";
  if (is_one()) return "1";
  std::ostringstream os;
  auto part = [&os](const char* name, int e) {
    if (e == 0) return;
    os << name;
    if (e != 1) os << "^" << e;
  };
  part("q", q);
  part("z1", z1);
  part("z2", z2);
  part("t", t);
  return os.str();
}

}  // namespace slchar

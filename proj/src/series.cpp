#include "slchar/series.hpp"

#include <sstream>

namespace slchar {

TruncatedSeries TruncatedSeries::one(TruncationPolicy policy) {
  TruncatedSeries s(policy);
  s.add_term(0, 0, 0, 1);
  return s;
}

TruncatedSeries TruncatedSeries::from_monomial(const Monomial& m,
                                               TruncationPolicy policy,
                                               const Coeff& c) {
  TruncatedSeries s(policy);
  if (m.is_zero()) return s;
  if (!m.is_finite() || m.t != 0)
    throw Error("series term must be a finite monomial: " + m.str());
  s.add_term(m.q, m.z1, m.z2, c);
  return s;
}

void TruncatedSeries::add_term(int q, int z1, int z2, const Coeff& c) {
  if (c == 0 || !policy_.admits(q, z1, z2)) return;
  Key k{q, z1, z2};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (policy_ != rhs.policy_) throw PolicyMismatch();
  for (const auto& [k, c] : rhs.terms_) add_term(k[0], k[1], k[2], c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (policy_ != rhs.policy_) throw PolicyMismatch();
  for (const auto& [k, c] : rhs.terms_) add_term(k[0], k[1], k[2], -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.policy_ != b.policy_) throw PolicyMismatch();
  TruncatedSeries out(a.policy_);
  // Convolution; policy filtering happens in add_term.
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
  return out;
}

TruncatedSeries TruncatedSeries::times(const Monomial& m, const Coeff& c) const {
  TruncatedSeries out(policy_);
  if (m.is_zero() || c == 0) return out;
  if (!m.is_finite() || m.t != 0)
    throw Error("series multiplier must be finite: " + m.str());
  for (const auto& [k, v] : terms_)
    out.add_term(k[0] + m.q, k[1] + m.z1, k[2] + m.z2, v * c);
  return out;
}

TruncatedSeries TruncatedSeries::negated() const {
  TruncatedSeries out(policy_);
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, -v);
  return out;
}

TruncatedSeries TruncatedSeries::shift_z2() const {
  TruncatedSeries out(policy_);
  for (const auto& [k, v] : terms_) out.add_term(k[0] + k[2], k[1], k[2], v);
  return out;
}

TruncatedSeries TruncatedSeries::substitute_z() const {
  TruncationPolicy p{policy_.qmax, std::nullopt, std::nullopt};
  TruncatedSeries out(p);
  for (const auto& [k, v] : terms_) out.add_term(k[0], k[1] - k[2], 0, v);
  return out;
}

Coeff TruncatedSeries::coeff_at(int q, int z1, int z2) const {
  if (!policy_.admits(q, z1, z2))
    throw OutOfWindow("q^" + std::to_string(q) + " z1^" + std::to_string(z1) +
                      " z2^" + std::to_string(z2));
  auto it = terms_.find(Key{q, z1, z2});
  return it == terms_.end() ? Coeff(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated_to(TruncationPolicy policy) const {
  TruncatedSeries out(policy);
  for (const auto& [k, v] : terms_) out.add_term(k[0], k[1], k[2], v);
  return out;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << v;
    if (k[0] || k[1] || k[2])
      os << "*" << Monomial{Monomial::Kind::Finite, k[0], k[1], k[2], 0}.str();
  }
  return os.str();
}

TruncatedSeries inv_one_minus(const Monomial& x, TruncationPolicy policy) {
  if (x.is_zero()) return TruncatedSeries::one(policy);
  if (x.is_infinite()) return TruncatedSeries::zero(policy);

  MonomialClass cls = classify(x);
  if (cls == MonomialClass::Unit) throw DivisionByVanishingFactor("1 - 1");
  if (cls == MonomialClass::Indeterminate) throw AmbiguousExpansion(x.str());

  // Small: sum_{j>=0} X^j.  Large: -X^{-1} sum_{j>=0} X^{-j}.
  Monomial step = cls == MonomialClass::Small ? x : x.inv();
  int j0 = cls == MonomialClass::Small ? 0 : 1;
  Coeff sign = cls == MonomialClass::Small ? 1 : -1;

  // Each dimension moves monotonically with j; stop at the first power that
  // escapes a window it cannot re-enter.
  bool q_stops = step.q > 0;
  bool z1_stops = policy.z1min && step.z1 < 0;
  bool z2_stops = policy.z2max && step.z2 > 0;
  if (!q_stops && !z1_stops && !z2_stops) throw WindowRequired(x.str());

  TruncatedSeries out(policy);
  for (int j = j0;; ++j) {
    Monomial p = step.pow(j);
    bool done = (q_stops && p.q > policy.qmax) ||
                (z1_stops && p.z1 < *policy.z1min) ||
                (z2_stops && p.z2 > *policy.z2max);
    if (done) break;
    out.add_term(p.q, p.z1, p.z2, sign);
  }
  return out;
}

TruncatedSeries pochhammer(const Monomial& x, std::optional<int> len, int sign,
                           TruncationPolicy policy) {
  if (sign != 1 && sign != -1) throw Error("pochhammer: sign must be +-1");
  TruncatedSeries out = TruncatedSeries::one(policy);
  if (!len) {
    if (!x.is_finite() || x.q < 0 || classify(x) != MonomialClass::Small)
      throw Error("infinite pochhammer needs a Small base with q >= 0, got " +
                  x.str());
    // q^j x has q-exponent >= j, so factors with j > qmax are 1 mod q^{qmax+1}.
    for (int j = 0; j <= policy.qmax; ++j) {
      Monomial f = Monomial::of(j) * x;
      if (f.q > policy.qmax) continue;
      if (sign == 1) {
        out = out - out.times(f);
      } else {
        out = out * inv_one_minus(f, policy);
      }
    }
    return out;
  }
  if (*len < 0) throw Error("pochhammer: negative length");
  for (int j = 0; j < *len; ++j) {
    Monomial f = Monomial::of(j) * x;
    if (sign == 1) {
      if (f.is_one()) return TruncatedSeries::zero(policy);
      out = out - out.times(f);
    } else {
      out = out * inv_one_minus(f, policy);
    }
  }
  return out;
}

namespace {

TruncatedSeries corner_term(const Monomial& num, const Monomial& d1,
                            const Monomial& d2, TruncationPolicy policy) {
  // The numerator may lower q (or move z1/z2), so expand the geometric
  // series in a window wide enough that nothing the final truncation keeps
  // has been cut off early.
  TruncationPolicy wide = policy.relaxed(std::max(0, -num.q),
                                         std::max(0, num.z1),
                                         std::max(0, -num.z2));
  TruncatedSeries t = TruncatedSeries::from_monomial(num, wide) *
                      inv_one_minus(d1, wide) * inv_one_minus(d2, wide);
  return t.truncated_to(policy);
}

}  // namespace

bool triangle_lemma_check(const Monomial& x, const Monomial& y, int a, int b,
                          TruncationPolicy policy) {
  if (a > b) throw Error("triangle lemma needs a <= b");
  const Monomial xy = x * y;
  TruncatedSeries lhs = TruncatedSeries::zero(policy);
  for (int m = a; m <= b; ++m)
    for (int n = a; n <= m; ++n)
      lhs += TruncatedSeries::from_monomial(x.pow(m) * y.pow(n), policy);
  TruncatedSeries rhs = corner_term(xy.pow(a), x, xy, policy) +
                        corner_term(x.pow(b) * y.pow(a), x.inv(), y, policy) +
                        corner_term(xy.pow(b), y.inv(), xy.inv(), policy);
  return lhs == rhs;
}

bool rectangle_lemma_check(const Monomial& x, const Monomial& y, int a, int b,
                           int c, int d, TruncationPolicy policy) {
  if (a > b + 1 || c > d + 1)
    throw Error("rectangle lemma needs a <= b+1 and c <= d+1");
  TruncatedSeries lhs = TruncatedSeries::zero(policy);
  for (int m = a; m <= b; ++m)
    for (int n = c; n <= d; ++n)
      lhs += TruncatedSeries::from_monomial(x.pow(m) * y.pow(n), policy);
  TruncatedSeries rhs =
      corner_term(x.pow(a) * y.pow(c), x, y, policy) +
      corner_term(x.pow(a) * y.pow(d), x, y.inv(), policy) +
      corner_term(x.pow(b) * y.pow(c), x.inv(), y, policy) +
      corner_term(x.pow(b) * y.pow(d), x.inv(), y.inv(), policy);
  return lhs == rhs;
}

}  // namespace slchar

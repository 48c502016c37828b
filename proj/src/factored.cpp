#include "slchar/factored.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>
#include <vector>

namespace slchar {

Poly Poly::from_monomial(const Monomial& m, const Coeff& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Coeff& c) {
  if (c == 0 || m.is_zero()) return;
  if (!m.is_finite()) throw Error("polynomial term must be finite: " + m.str());
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms) add_term(m, c);
  return *this;
}

Poly Poly::times(const Monomial& m, const Coeff& c) const {
  Poly out;
  if (m.is_zero() || c == 0) return out;
  for (const auto& [u, v] : terms) out.add_term(u * m, v * c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) out.add_term(u * v, cu * cv);
  return out;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (!m.is_one()) os << "*" << m.str();
  }
  return os.str();
}

std::optional<Poly> divide_by_one_minus(const Poly& p, const Monomial& m) {
  if (!m.is_finite() || m.is_one())
    throw Error("cannot divide by (1 - " + m.str() + ")");
  if (p.is_zero()) return Poly{};

  // Group terms into orbits under multiplication by m.  The position of a
  // term within its orbit is read off the first coordinate where m is
  // nonzero; u * m^{-floor(u_c / m_c)} is then an orbit invariant.
  std::array<int, 4> mv{m.q, m.z1, m.z2, m.t};
  int c = 0;
  while (mv[c] == 0) ++c;
  auto floordiv = [](int a, int b) {
    int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
  };

  std::map<Monomial, std::map<int, Coeff>> orbits;
  for (const auto& [u, coeff] : p.terms) {
    std::array<int, 4> uv{u.q, u.z1, u.z2, u.t};
    int j = floordiv(uv[c], mv[c]);
    orbits[u * m.pow(-j)][j] = coeff;
  }

  // Within an orbit sum_j c_j m^j = (1 - m) sum_j d_j m^j forces
  // d_j = c_j + d_{j-1}, and exactness means the running sum ends at zero.
  Poly out;
  for (const auto& [base, coef] : orbits) {
    int jmin = coef.begin()->first;
    int jmax = coef.rbegin()->first;
    if (jmax - jmin > 100000) return std::nullopt;
    Coeff d = 0;
    for (int j = jmin; j <= jmax; ++j) {
      auto it = coef.find(j);
      if (it != coef.end()) d += it->second;
      if (j < jmax && d != 0) out.add_term(base * m.pow(j), d);
    }
    if (d != 0) return std::nullopt;
  }
  return out;
}

FactoredRational FactoredRational::from_monomial(const Monomial& m,
                                                 const Coeff& c) {
  FactoredRational f;
  f.numer = Poly::from_monomial(m, c);
  return f;
}

void FactoredRational::mul_mono(const Monomial& m, const Coeff& c) {
  numer = numer.times(m, c);
}

void FactoredRational::negate() {
  for (auto& [m, c] : numer.terms) c = -c;
}

// True when m^{-1} is the canonical base for the factor (1 - m).
static bool flip_preferred(const Monomial& m) {
  Monomial s = m;
  s.t = 0;
  if (s.is_one()) return m.t < 0;  // pure deformation power
  switch (classify(s)) {
    case MonomialClass::Small:
      return false;
    case MonomialClass::Large:
      return true;
    default:
      return m.inv() < m;  // no sanctioned direction; pick a stable rep
  }
}

void FactoredRational::mul_lin(Monomial m, int e) {
  if (e == 0 || is_zero() || m.is_zero()) return;
  if (!m.is_finite())
    throw Error("linear factor base must be finite: " + m.str());
  if (m.is_one()) {
    if (e > 0) {
      numer.terms.clear();
      return;
    }
    throw DivisionByVanishingFactor("(1 - 1)");
  }
  if (flip_preferred(m)) {
    // (1 - m)^e = (-m)^e (1 - m^{-1})^e
    mul_mono(m.pow(e), e % 2 == 0 ? 1 : -1);
    m = m.inv();
  }
  int& slot = lin[m];
  slot += e;
  if (slot == 0) lin.erase(m);
}

void FactoredRational::mul_inf(Monomial m, int e) {
  if (e == 0 || is_zero() || m.is_zero()) return;
  if (!m.is_finite())
    throw Error("infinite product base must be finite: " + m.str());
  while (m.q < 0) {
    mul_lin(m, e);
    if (is_zero()) return;
    m.q += 1;
  }
  if (m.is_one()) {
    // (1; q)_inf vanishes through its leading factor.
    if (e > 0) {
      numer.terms.clear();
      return;
    }
    throw DivisionByVanishingFactor("(1; q)_inf");
  }
  int& slot = inf[m];
  slot += e;
  if (slot == 0) inf.erase(m);
}

void FactoredRational::mul(const FactoredRational& rhs) {
  numer = numer * rhs.numer;
  for (const auto& [m, e] : rhs.lin) mul_lin(m, e);
  for (const auto& [m, e] : rhs.inf) mul_inf(m, e);
}

FactoredRational FactoredRational::shifted() const {
  FactoredRational out;
  for (const auto& [m, c] : numer.terms) out.numer.add_term(m.shifted(), c);
  for (const auto& [m, e] : lin) out.mul_lin(m.shifted(), e);
  for (const auto& [m, e] : inf) out.mul_inf(m.shifted(), e);
  return out;
}

std::string FactoredRational::str() const {
  std::ostringstream os;
  os << "(" << numer.str() << ")";
  for (const auto& [m, e] : lin) os << " (1-" << m.str() << ")^" << e;
  for (const auto& [m, e] : inf) os << " (" << m.str() << ")_inf^" << e;
  return os.str();
}

// Cancel structure that reappeared in a freshly added numerator: a two-term
// numerator becomes an explicit linear factor, and denominator factors that
// divide the numerator exactly are cancelled.
static void refactor(FactoredRational& f) {
  if (f.numer.terms.size() == 2) {
    auto it = f.numer.terms.begin();
    auto jt = std::next(it);
    if (it->second == -jt->second) {
      // c u - c v = c u (1 - v/u)
      Monomial base = it->first;
      Monomial ratio = mono_div(jt->first, it->first);
      Coeff c = it->second;
      f.numer = Poly::from_monomial(base, c);
      f.mul_lin(ratio, 1);
    }
  }
  bool progress = true;
  while (progress && !f.numer.is_zero()) {
    progress = false;
    for (auto& [m, e] : f.lin) {
      if (e >= 0) continue;
      if (auto q = divide_by_one_minus(f.numer, m)) {
        f.numer = std::move(*q);
        ++e;
        progress = true;
        break;
      }
    }
  }
  std::erase_if(f.lin, [](const auto& kv) { return kv.second == 0; });
}

static std::array<int, 3> inf_orbit_key(const Monomial& m) {
  return {m.z1, m.z2, m.t};
}

FactoredRational fr_add(const FactoredRational& a0, const FactoredRational& b0) {
  if (a0.is_zero()) return b0;
  if (b0.is_zero()) return a0;
  FactoredRational a = a0, b = b0;

  // Push every infinite-product base up to the largest q-power seen in its
  // orbit, so identical products can be recognized as shared.
  std::map<std::array<int, 3>, int> top;
  for (const FactoredRational* f : {&a, &b})
    for (const auto& [m, e] : f->inf) {
      auto [it, fresh] = top.emplace(inf_orbit_key(m), m.q);
      if (!fresh) it->second = std::max(it->second, m.q);
    }
  for (FactoredRational* f : {&a, &b}) {
    auto old = std::exchange(f->inf, {});
    for (const auto& [m, e] : old) {
      Monomial mm = m;
      for (int tq = top.at(inf_orbit_key(m)); mm.q < tq; ++mm.q)
        f->mul_lin(mm, e);
      f->mul_inf(mm, e);
    }
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  auto shared_min = [](const std::map<Monomial, int>& x,
                       const std::map<Monomial, int>& y) {
    std::map<Monomial, int> s;
    auto get = [](const std::map<Monomial, int>& m, const Monomial& k) {
      auto it = m.find(k);
      return it == m.end() ? 0 : it->second;
    };
    for (const auto& [m, e] : x)
      if (int v = std::min(e, get(y, m)); v != 0) s[m] = v;
    for (const auto& [m, e] : y)
      if (int v = std::min(e, get(x, m)); v != 0) s[m] = v;
    return s;
  };
  std::map<Monomial, int> slin = shared_min(a.lin, b.lin);
  std::map<Monomial, int> sinf = shared_min(a.inf, b.inf);

  auto residual = [&](const FactoredRational& f) {
    auto get = [](const std::map<Monomial, int>& m, const Monomial& k) {
      auto it = m.find(k);
      return it == m.end() ? 0 : it->second;
    };
    for (const auto& [m, e] : sinf)
      if (get(f.inf, m) != e)
        throw Error("summands carry different infinite products");
    for (const auto& [m, e] : f.inf)
      if (get(sinf, m) != e)
        throw Error("summands carry different infinite products");
    Poly p = f.numer;
    for (const auto& [m, e] : f.lin) {
      int r = e - get(slin, m);
      for (int i = 0; i < r; ++i) p += p.times(m, -1);  // * (1 - m)
    }
    for (const auto& [m, e] : slin) {
      if (f.lin.count(m)) continue;
      for (int i = 0; i < -e; ++i) p += p.times(m, -1);
    }
    return p;
  };

  FactoredRational out;
  out.numer = residual(a);
  out.numer += residual(b);
  if (out.numer.is_zero()) return FactoredRational::zero();
  out.lin = std::move(slin);
  out.inf = std::move(sinf);
  refactor(out);
  return out;
}

FactoredRational resolve_t(FactoredRational f) {
  if (f.is_zero()) return FactoredRational::zero();

  std::vector<std::pair<Monomial, int>> pure;
  for (auto it = f.lin.begin(); it != f.lin.end();) {
    const Monomial& m = it->first;
    if (m.q == 0 && m.z1 == 0 && m.z2 == 0 && m.t != 0) {
      pure.emplace_back(m, it->second);
      it = f.lin.erase(it);
    } else {
      ++it;
    }
  }
  for (auto& [m, e] : pure) {
    for (; e < 0; ++e) {
      auto q = divide_by_one_minus(f.numer, m);
      if (!q)
        throw StabilizationFailure("deformation factor " + m.str() +
                                   " does not divide " + f.numer.str());
      f.numer = std::move(*q);
    }
    if (e > 0) return FactoredRational::zero();  // (1 - t^d) -> 0
  }

  FactoredRational out;
  for (const auto& [m, c] : f.numer.terms) {
    Monomial u = m;
    u.t = 0;
    out.numer.add_term(u, c);
  }
  for (const auto& [m, e] : f.lin) {
    Monomial u = m;
    u.t = 0;
    out.mul_lin(u, e);
  }
  for (const auto& [m, e] : f.inf) {
    Monomial u = m;
    u.t = 0;
    out.mul_inf(u, e);
  }
  return out;
}

// Direction in which a denominator factor 1/(1 - m) steps when expanded.
static std::optional<Monomial> expansion_step(const Monomial& m) {
  switch (classify(m)) {
    case MonomialClass::Small:
      return m;
    case MonomialClass::Large:
      return m.inv();
    default:
      return std::nullopt;  // expansion will be rejected later anyway
  }
}

TruncatedSeries fr_to_series(const FactoredRational& f,
                             TruncationPolicy policy) {
  auto check_t = [](const Monomial& m) {
    if (m.t != 0)
      throw Error("unresolved deformation variable in " + m.str());
  };
  for (const auto& [m, c] : f.numer.terms) check_t(m);
  for (const auto& [m, e] : f.lin) check_t(m);
  for (const auto& [m, e] : f.inf) check_t(m);
  if (f.numer.is_zero()) return TruncatedSeries::zero(policy);

  // Slack: how far the running product must extend past each window so that
  // later factors moving the other way (down in q or z2, up in z1) cannot
  // push a dropped term back inside.  Denominator expansions only ever raise
  // q and z2, so the q/z2 slack comes from the numerator and from expanded
  // numerator factors alone.
  int dq = 0, dz1 = 0, dz2 = 0;
  for (const auto& [m, c] : f.numer.terms) {
    dq = std::max(dq, -m.q);
    dz2 = std::max(dz2, -m.z2);
    dz1 = std::max(dz1, m.z1);
  }
  for (const auto& [m, e] : f.lin) {
    if (e <= 0) continue;
    dq += e * std::max(0, -m.q);
    dz2 += e * std::max(0, -m.z2);
    dz1 += e * std::max(0, m.z1);
  }
  TruncationPolicy mid = policy.relaxed(dq, 0, dz2);
  if (policy.z1min) {
    auto steps_cap = [&](const Monomial& s) {
      if (s.q > 0) return std::max(0, mid.qmax) / s.q;
      if (mid.z2max && s.z2 > 0) return std::max(0, *mid.z2max) / s.z2;
      return 0;  // such an expansion cannot terminate and will throw
    };
    for (const auto& [m, e] : f.lin) {
      if (e >= 0) continue;
      if (auto s = expansion_step(m); s && s->z1 > 0)
        dz1 += -e * steps_cap(*s) * s->z1;
    }
    for (const auto& [m, e] : f.inf) {
      if (m.z1 <= 0) continue;
      if (e < 0)
        dz1 += -e * steps_cap(m) * m.z1;
      else
        dz1 += e * (mid.qmax + 1) * m.z1;  // at most one pick per factor
    }
  }
  TruncationPolicy relaxed = policy.relaxed(dq, dz1, dz2);

  TruncatedSeries out(relaxed);
  for (const auto& [m, c] : f.numer.terms) out.add_term(m.q, m.z1, m.z2, c);
  for (const auto& [m, e] : f.lin) {
    if (e > 0) {
      for (int i = 0; i < e; ++i) out = out - out.times(m);
    } else {
      TruncatedSeries g = inv_one_minus(m, relaxed);
      for (int i = 0; i < -e; ++i) out = out * g;
    }
  }
  for (const auto& [m, e] : f.inf) {
    TruncatedSeries g = pochhammer(m, std::nullopt, e > 0 ? 1 : -1, relaxed);
    for (int i = 0; i < std::abs(e); ++i) out = out * g;
  }
  return out.truncated_to(policy);
}

}  // namespace slchar

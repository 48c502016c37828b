#include "slchar/operators.hpp"

#include <map>

#include "slchar/transfer.hpp"

namespace slchar {

VertexOp to_vertex_op(Letter g) {
  switch (g) {
    case Letter::A: return VertexOp::A;
    case Letter::B: return VertexOp::B;
    case Letter::C: return VertexOp::C;
    case Letter::D: return VertexOp::D;
    default: return VertexOp::E;
  }
}

namespace {

const char* op_name(VertexOp g) {
  switch (g) {
    case VertexOp::A: return "A";
    case VertexOp::B: return "B";
    case VertexOp::C: return "C";
    case VertexOp::D: return "D";
    case VertexOp::E: return "E";
    case VertexOp::B1: return "B1";
    case VertexOp::B2: return "B2";
    case VertexOp::D1: return "D1";
    default: return "D2";
  }
}

Monomial quot(const Monomial& x, const Monomial& y, VertexOp g) {
  if (x.is_zero() && y.is_zero())
    throw UndefinedOperator(std::string(op_name(g)) +
                            ": 0/0 vector-part quotient");
  return mono_div(x, y);
}

}  // namespace

SimpleVector apply_letter(VertexOp g, const SimpleVector& v) {
  SimpleVector out;
  out.limit_group = v.limit_group;
  out.deform_round = v.deform_round;
  if (v.is_zero()) return out;

  const Monomial zz = Monomial::of(0, 1, 1);    // z1 z2
  const Monomial nqz = Monomial::of(-1, 0, 1);  // q^{-1} z2
  const Monomial &p = v.part[0], &q = v.part[1], &r = v.part[2];

  std::array<Monomial, 3> parts;
  std::vector<Monomial> dens, nums;
  int sign = 1;
  switch (g) {
    case VertexOp::A:
      parts = {p, q, nqz * p};
      dens = {zz * quot(q, p, g), quot(r, q, g)};
      break;
    case VertexOp::B:
      parts = {p, r, nqz * p};
      dens = {zz * quot(q, p, g), quot(q, r, g), quot(r, p, g)};
      nums = {quot(q, p, g)};
      break;
    case VertexOp::C:
      parts = {zz * q, q, nqz * p};
      dens = {zz.inv() * quot(p, q, g), quot(r, q, g)};
      break;
    case VertexOp::D:
      parts = {zz * q, r, nqz * p};
      dens = {zz.inv() * quot(p, q, g), zz.inv() * quot(r, q, g),
              quot(q, r, g)};
      nums = {zz.inv()};
      break;
    case VertexOp::E:
      parts = {r, r, nqz * p};
      dens = {zz * quot(q, r, g), quot(p, r, g)};
      break;
    case VertexOp::B1:
      parts = {p, r, nqz * p};
      dens = {zz * quot(q, p, g), quot(r, p, g)};
      break;
    case VertexOp::B2:
      parts = {p, r, nqz * p};
      dens = {zz * quot(q, p, g), quot(r, q, g)};
      sign = -1;
      break;
    case VertexOp::D1:
      parts = {zz * q, r, nqz * p};
      dens = {zz.inv() * quot(p, q, g), zz.inv() * quot(r, q, g)};
      break;
    default:  // D2
      parts = {zz * q, r, nqz * p};
      dens = {zz.inv() * quot(p, q, g), quot(r, q, g)};
      sign = -1;
      break;
  }

  FactoredRational f = v.scalar;
  if (sign < 0) f.negate();

  for (const Monomial& x : nums) {
    if (x.is_zero()) continue;  // (1 - 0) = 1
    if (x.is_infinite()) return out;  // limit value 0
    if (x.is_one()) return out;       // factor (1 - 1) = 0
    f.mul_lin(x, 1);
  }
  for (const Monomial& x : dens) {
    if (x.is_zero()) continue;        // 1/(1 - 0) = 1
    if (x.is_infinite()) return out;  // 1/(1 - inf) = 0
    Monomial s = x;
    s.t = 0;
    if (s.is_one()) {
      if (x.t == 0)
        throw UndefinedOperator(std::string(op_name(g)) +
                                ": vanishing denominator factor");
      // pure deformation power: resolved at t -> 1
    } else if (classify(s.shifted()) == MonomialClass::Indeterminate) {
      // Definedness is a property of the factors after the trailing z2-shift;
      // the shift only raises q-degrees, so it can rescue a factor but never
      // spoil one.
      throw UndefinedOperator(std::string(op_name(g)) +
                              ": denominator " + x.shifted().str() +
                              " has no expansion direction");
    }
    f.mul_lin(x, -1);
  }

  out.scalar = f.shifted();
  for (int j = 0; j < 3; ++j) out.part[j] = parts[j].shifted();
  return out;
}

VectorSum apply_word(const OperatorWord& w, VectorSum state) {
  int next_group = 0;
  for (const SimpleVector& v : state)
    next_group = std::max(next_group, v.limit_group + 1);

  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    const OperatorWord::Step& step = *it;
    VectorSum next;
    for (const SimpleVector& v : state) {
      if (v.is_zero()) continue;
      std::vector<SimpleVector> outs;
      bool clean = true;
      try {
        for (Letter g : step) outs.push_back(apply_letter(to_vertex_op(g), v));
      } catch (const UndefinedOperator&) {
        if (step.size() == 1) throw;
        clean = false;
      }
      if (!clean) {
        // Deform the vector part and take the limit later, as a group.
        outs.clear();
        SimpleVector dv = v;
        int scale = 1;
        for (int j = 0; j < v.deform_round; ++j) scale *= 7;
        const int exps[3] = {0, 1, 3};  // pairwise differences all distinct
        for (int j = 0; j < 3; ++j)
          if (dv.part[j].is_finite()) dv.part[j].t += exps[j] * scale;
        dv.deform_round += 1;
        if (dv.limit_group < 0) dv.limit_group = next_group++;
        for (Letter g : step) outs.push_back(apply_letter(to_vertex_op(g), dv));
      }
      for (SimpleVector& o : outs)
        if (!o.is_zero()) next.push_back(std::move(o));
    }
    state = std::move(next);
  }
  return state;
}

FactoredRational v_infinity_scalar(int n) {
  int half = n * (n - 1) / 2;
  FactoredRational f = FactoredRational::from_monomial(Monomial::of(half),
                                                       n % 2 == 1 ? 1 : -1);
  f.mul_lin(Monomial::of(2 * n, 1, 2), 1);       // 1 - q^{2n} z1 z2^2
  f.mul_inf(Monomial::of(1), -1);                // 1/(q)_inf
  f.mul_inf(Monomial::of(n + 1, 1, 2), -1);      // 1/(q^{n+1} z1 z2^2)_inf
  for (int j = 1; j <= n - 1; ++j) f.mul_lin(Monomial::of(j), -1);  // 1/(q)_{n-1}
  f.mul_lin(Monomial::of(n, 0, 1), -1);          // 1/(1 - q^n z2)
  return f;
}

VectorSum v_infinity(TruncationPolicy policy) {
  VectorSum out;
  for (int n = 1; n * (n - 1) / 2 <= policy.qmax; ++n) {
    SimpleVector v;
    v.scalar = v_infinity_scalar(n);
    v.part = {Monomial::one(), Monomial::of(n, 0, 1), Monomial::of(0, 0, 1)};
    out.push_back(std::move(v));
  }
  return out;
}

FactoredRational component_scalar(const SimpleVector& v, int k, int i, int l) {
  Monomial b = v.part[0].pow(k - l) * v.part[1].pow(l - i) * v.part[2].pow(i);
  if (b.is_zero()) return FactoredRational::zero();
  if (!b.is_finite())
    throw Error("infinite vector-part component");
  FactoredRational f = v.scalar;
  f.mul_mono(b);
  return f;
}

CharacterVector to_character(const VectorSum& vs, int k,
                             TruncationPolicy policy) {
  std::vector<const SimpleVector*> plain;
  std::map<int, std::vector<const SimpleVector*>> groups;
  for (const SimpleVector& v : vs) {
    if (v.is_zero()) continue;
    if (v.limit_group < 0)
      plain.push_back(&v);
    else
      groups[v.limit_group].push_back(&v);
  }

  CharacterVector out = CharacterVector::zero(k, policy);
  for (StateIndex s : all_states(k)) {
    TruncatedSeries acc(policy);
    for (const SimpleVector* v : plain)
      acc += fr_to_series(component_scalar(*v, k, s.i, s.l), policy);
    for (const auto& [id, members] : groups) {
      FactoredRational sum = FactoredRational::zero();
      for (const SimpleVector* v : members)
        sum = fr_add(sum, component_scalar(*v, k, s.i, s.l));
      acc += fr_to_series(resolve_t(std::move(sum)), policy);
    }
    out.at(s) = std::move(acc);
  }
  return out;
}

bool pentagon_check(const SimpleVector& v, int k, TruncationPolicy policy) {
  CharacterVector lhs = transfer_step(build_matrix(k), to_character({v}, k, policy));
  VectorSum sum;
  for (VertexOp g : {VertexOp::A, VertexOp::B, VertexOp::C, VertexOp::D,
                     VertexOp::E})
    sum.push_back(apply_letter(g, v));
  return lhs == to_character(sum, k, policy);
}

}  // namespace slchar

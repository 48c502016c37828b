#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slchar/operators.hpp"
#include "slchar/transfer.hpp"

using namespace slchar;

namespace {

const Monomial kOne = Monomial::one();
const Monomial kZ2 = Monomial::of(0, 0, 1);

SimpleVector seed() {  // [1, 0, z2]
  return SimpleVector::bracket(kOne, Monomial::zero(), kZ2);
}

TruncationPolicy pol(int qmax) { return {qmax, std::nullopt, 3 * qmax + 10}; }

bool same_character(const VectorSum& a, const VectorSum& b, int k,
                    TruncationPolicy p) {
  return to_character(a, k, p) == to_character(b, k, p);
}

}  // namespace

TEST_CASE("A kills the seed, E moves it") {
  SimpleVector a = apply_letter(VertexOp::A, seed());
  CHECK(a.is_zero());

  SimpleVector e = apply_letter(VertexOp::E, seed());
  CHECK(e.part[0] == Monomial::of(1, 0, 1));
  CHECK(e.part[1] == Monomial::of(1, 0, 1));
  CHECK(e.part[2] == kZ2);
}

TEST_CASE("BE vanishes identically") {
  // on any simple vector with distinct nonzero parts, E's output has equal
  // first components, so B's numerator (1 - Q/P) is the zero factor
  SimpleVector v = SimpleVector::bracket(Monomial::of(0, -1, 0),
                                         Monomial::of(1, 0, 1),
                                         Monomial::of(0, 1, 2));
  VectorSum out = apply_word(parse_word("B E"), {v});
  for (const SimpleVector& s : out) CHECK(s.is_zero());
}

TEST_CASE("word application is rightmost first") {
  // EA(seed) = E(0) = 0, while AE(seed) is not zero
  VectorSum ea = apply_word(parse_word("E A"), {seed()});
  bool all_zero = true;
  for (const SimpleVector& s : ea) all_zero &= s.is_zero();
  CHECK(all_zero);
  VectorSum ae = apply_word(parse_word("A E"), {seed()});
  CHECK_FALSE(to_character(ae, 1, pol(6)) == CharacterVector::zero(1, pol(6)));
}

TEST_CASE("tail vector lemma") {
  TruncationPolicy p = pol(10);
  VectorSum vinf = v_infinity(p);
  CHECK(same_character(apply_word(parse_word("(A+B)"), vinf), vinf, 1, p));

  SimpleVector f1;
  f1.scalar = v_infinity_scalar(1);
  f1.part = {kOne, Monomial::of(1, 0, 1), kZ2};
  CHECK(same_character(apply_word(parse_word("B"), vinf), {f1}, 1, p));

  for (int n = 1; n <= 4; ++n) {
    OperatorWord w;
    w.append_power(parse_word("A"), n);
    SimpleVector fn;
    fn.scalar = v_infinity_scalar(n + 1);
    fn.part = {kOne, Monomial::of(n + 1, 0, 1), kZ2};
    CHECK(same_character(apply_word(w, {f1}), {fn}, 1, p));
  }
}

TEST_CASE("pentagon: M S agrees with the operator sum") {
  for (int k = 1; k <= 2; ++k) {
    TruncationPolicy p = pol(8);
    CHECK(pentagon_check(SimpleVector::bracket(kOne, Monomial::of(1, 0, 1), kZ2),
                         k, p));
    CHECK(pentagon_check(SimpleVector::bracket(kOne, Monomial::of(2, 0, 1),
                                               Monomial::of(1, 0, 2)),
                         k, p));
  }
}

TEST_CASE("CBCAE is defined and lands on the shifted template") {
  Monomial P = Monomial::of(0, -1, 0), Q = Monomial::of(0, -1, 1),
           R = Monomial::of(0, 1, 1);
  VectorSum out =
      apply_word(parse_word("C B C A E"), {SimpleVector::bracket(P, Q, R)});
  REQUIRE(out.size() == 1);
  Monomial rt = R;
  for (int j = 0; j < 5; ++j) rt = rt.shifted();
  CHECK(out[0].part[0] == Monomial::of(3, 1, 2) * rt);
  CHECK(out[0].part[1] == Monomial::of(2, 0, 1) * rt);
  CHECK(out[0].part[2] == Monomial::of(3, 1, 2) * rt);
}

TEST_CASE("prefixing CBCAE with B or E is undefined, their sum is not") {
  Monomial P = Monomial::of(0, -1, 0), Q = Monomial::of(0, -1, 1),
           R = Monomial::of(0, 1, 1);
  auto base = [&] {
    return VectorSum{SimpleVector::bracket(P, Q, R)};
  };
  CHECK_THROWS_AS(apply_word(parse_word("B C B C A E"), base()),
                  UndefinedOperator);
  CHECK_THROWS_AS(apply_word(parse_word("E C B C A E"), base()),
                  UndefinedOperator);
  VectorSum out = apply_word(parse_word("(B+E) C B C A E"), base());
  TruncationPolicy p{40, std::nullopt, 60};
  CharacterVector ch = to_character(out, 1, p);
  CHECK_FALSE(ch == CharacterVector::zero(1, p));
}

TEST_CASE("v_infinity term count tracks the window") {
  CHECK(v_infinity({0, std::nullopt, std::nullopt}).size() == 1);   // just n=1
  CHECK(v_infinity({10, std::nullopt, std::nullopt}).size() == 5);  // up to n=5
}

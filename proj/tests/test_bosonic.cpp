#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slchar/families.hpp"
#include "slchar/transfer.hpp"

using namespace slchar;

TEST_CASE("quadratic exponent forms at sample points") {
  // doubled values
  CHECK(quad_form2(kAlpha, 1, 0, 0) == 6);    // alpha = 3(n+s)^2 + 2ms = 3
  CHECK(quad_form2(kAlpha, 1, 2, 1) == 32);   // 3*4 + 2*2*1 = 16
  CHECK(quad_form2(kBeta, 0, 1, 0) == 2);     // beta = m^2 = 1
  CHECK(quad_form2(kGamma, 1, 1, 1) == 81);   // gamma = 35/2 + 23 = 81/2
  CHECK(quad_form2(kDelta, 1, 0, 1) == 41);   // delta = 41/2
}

TEST_CASE("linear expression parsing") {
  LinExpr e = parse_lin_expr("gamma-17/2n-1/2m-7/2s+2");
  CHECK(e.quad[kGamma] == 1);
  CHECK(e.eval_int(0, 0, 0) == 2);
  CHECK(e.eval_int(0, 2, 0) == 3);  // gamma(0,2,0) = 2, -1/2*2 = -1, +2
  CHECK_THROWS_AS(parse_lin_expr("1/2n").eval_int(1, 0, 0),
                  FormulaTranscriptionError);
  CHECK(parse_lin_expr("-1").eval_int(5, 5, 5) == -1);
  CHECK(parse_lin_expr("2n+2s").eval_int(3, 0, 4) == 14);
}

TEST_CASE("the table loads all eighteen records") {
  const auto& table = family_table();
  REQUIRE(table.size() == 18);
  for (int j = 0; j < 18; ++j) CHECK(table[j].id == j + 1);
  // each shape instantiates to a word at its domain base point
  for (const FamilyRecord& f : table) {
    OperatorWord w = instantiate_shape(f.shape, f.nmin, f.mmin, f.smin);
    CHECK(!w.steps.empty());
  }
}

TEST_CASE("factored scalars use only the sanctioned linear bases") {
  const auto& table = family_table();
  for (const FamilyRecord& f : table)
    for (int n = f.nmin; n <= f.nmin + 1; ++n)
      assert_linear_factor_shapes(family_scalar(f, n, f.mmin, f.smin));
}

TEST_CASE("closed route equals operator route, spot checks") {
  TruncationPolicy polc{6, std::nullopt, std::nullopt};
  TruncationPolicy polo{6, std::nullopt, 24};
  for (int fid : {1, 3, 6, 9, 12, 14, 18}) {
    const FamilyRecord& f = family_table()[fid - 1];
    int n = f.nmin, m = f.mmin, s = f.smin;
    CharacterVector a = family_term_closed(fid, n, m, s, 1, polc);
    CharacterVector b = family_term_operator(fid, n, m, s, 1, polo);
    for (StateIndex st : all_states(1))
      CHECK(a.at(st) == b.at(st).truncated_to(polc));
  }
}

TEST_CASE("the eighteen-family sum is the character") {
  TruncationPolicy pol{8, std::nullopt, std::nullopt};
  for (int k = 1; k <= 2; ++k)
    CHECK(bosonic_sum_character(k, pol, Route::Closed) ==
          limit_character(k, pol));
}

TEST_CASE("single-sum identity for the infinite product ratio") {
  TruncationPolicy pol{12, std::nullopt, std::nullopt};
  CHECK(jackson_check(Monomial::of(2, 1, 2), Monomial::one(), pol));
  CHECK(jackson_check(Monomial::of(1), Monomial::of(2), pol));
  CHECK(jackson_check(Monomial::of(1, 0, 1), Monomial::of(1), pol));
}

TEST_CASE("pair cancellations, base point") {
  TruncationPolicy pol{6, std::nullopt, 20};
  for (int pid : {0, 5, 9, 13, 18, 23, 27, 31, 35})
    CHECK(cancellation_check(pid, 0, 0, 0, 1, pol));
}

TEST_CASE("pair table covers the four leading letters") {
  for (int pid = 0; pid < 36; ++pid) {
    auto [left, right] = cancellation_pair(pid);
    char lead = pid < 9 ? 'A' : pid < 18 ? 'C' : pid < 27 ? 'B' : 'E';
    CHECK(left[0] == lead);
    CHECK(right[0] == lead);
  }
  CHECK_THROWS_AS(cancellation_pair(36), InvalidConfig);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slchar/paths.hpp"
#include "slchar/transfer.hpp"

using namespace slchar;

TEST_CASE("admissibility of small configurations") {
  // k = 1, state (0,0): a = (0), b = (0) plus trailing zeros
  CHECK(is_admissible({0}, {0}, 1, 0, 0));
  // a lone b_1 = 1 fails the tail constraint sum b <= sum a shifted by one;
  // pairing it with a_2 = 1 makes it admissible (the q^3 z1 z2^2 path)
  CHECK_FALSE(is_admissible({0, 0}, {0, 1}, 1, 0, 0));
  CHECK(is_admissible({0, 0, 1}, {0, 1}, 1, 0, 0));
  CHECK_FALSE(is_admissible({0, 1}, {0, 1}, 1, 0, 0));  // a_1+b_1 too heavy
  // state (1,1), k=1: b_1 = 1 violates b_0 + a_0 + b_1 <= k
  CHECK(is_admissible({1}, {0}, 1, 1, 1));
  CHECK_FALSE(is_admissible({1, 0}, {0, 1}, 1, 1, 1));
  // boundary mismatch is a configuration error
  CHECK_THROWS_AS(is_admissible({0}, {1}, 1, 0, 0), InvalidConfig);
}

TEST_CASE("weights collect the three gradings") {
  PathConfig c;
  c.k = 2;
  c.l = 1;
  c.i = 1;
  c.a = {1, 0, 1};
  c.b = {0, 1, 0};
  // q: 1*(0+1) + 2*(1+0) = 3; z1: sum b = 1; z2: sum a + sum b = 3
  CHECK(path_weight(c) == Monomial::of(3, 1, 3));
}

TEST_CASE("enumeration counts grow with the window") {
  auto small = enumerate_configs(1, 0, 0, 2);
  auto larger = enumerate_configs(1, 0, 0, 5);
  CHECK(small.size() >= 3);  // empty path, a_1 = 1, a_2 = 1
  CHECK(larger.size() > small.size());
  for (const auto& [cfg, w] : larger) CHECK(w.q <= 5);
}

TEST_CASE("oracle equals the recursion limit") {
  TruncationPolicy pol{7, std::nullopt, std::nullopt};
  for (int k = 1; k <= 3; ++k) {
    CharacterVector chi = limit_character(k, pol);
    for (StateIndex s : all_states(k))
      CHECK(oracle_character(k, s.l, s.i, pol) == chi.at(s));
  }
}

TEST_CASE("full character substitutes z1 -> z, z2 -> 1/z") {
  TruncationPolicy pol{6, std::nullopt, std::nullopt};
  for (int k = 1; k <= 2; ++k)
    for (int l = 0; l <= k; ++l) {
      TruncatedSeries direct = full_character(k, l, pol);
      TruncatedSeries summed = oracle_character(k, l, 0, pol).substitute_z();
      for (int i = 1; i <= l; ++i)
        summed += oracle_character(k, l, i, pol).substitute_z();
      CHECK(direct == summed);
    }
}

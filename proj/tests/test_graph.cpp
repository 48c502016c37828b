#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slchar/graph.hpp"

using namespace slchar;

TEST_CASE("letter substitutions") {
  CHECK(sigma_letter(Letter::A).img == std::array<int, 3>{1, 2, 1});
  CHECK(sigma_letter(Letter::B).img == std::array<int, 3>{1, 3, 1});
  CHECK(sigma_letter(Letter::C).img == std::array<int, 3>{2, 2, 1});
  CHECK(sigma_letter(Letter::D).img == std::array<int, 3>{2, 3, 1});
  CHECK(sigma_letter(Letter::E).img == std::array<int, 3>{3, 3, 1});
}

TEST_CASE("sigma is an anti-homomorphism") {
  OperatorWord ab = parse_word("A B"), ba = parse_word("B A");
  CHECK(sigma_word(ab) == compose(sigma_letter(Letter::B), sigma_letter(Letter::A)));
  CHECK(sigma_word(ba) == compose(sigma_letter(Letter::A), sigma_letter(Letter::B)));
  // consistency with step-by-step image tracing from the top vertex
  OperatorWord w = parse_word("C B C A E");
  auto path = trace_path(w);
  CHECK(path.front() == 7u);
  CHECK(path.back() == sigma_image(sigma_word(w), 7u));
  CHECK_THROWS_AS(sigma_word(parse_word("(A+B)")), InvalidConfig);
}

TEST_CASE("arrows from the top vertex all differ") {
  auto groups = arrow_groups(7);
  CHECK(groups.size() == 5);
}

TEST_CASE("arrows merge where vector parts coincide") {
  // on {1,2} all five arrows stay distinct; on {1,3} the pairs {A,B} and
  // {C,D} merge, and on {2,3} only {A,C} and {B,D,E} remain
  CHECK(arrow_groups(3).size() == 5);
  CHECK(arrow_groups(5).size() == 3);
  CHECK(arrow_groups(6).size() == 2);
  for (Vertex v : {3u, 5u, 6u}) {
    size_t letters = 0;
    for (const auto& g : arrow_groups(v)) letters += g.size();
    CHECK(letters == 5);
  }
}

TEST_CASE("good words avoid the bottom floor") {
  for (const auto& [shape, n, m, s, w] : enumerate_good_words(2, 2, 1))
    CHECK(avoids_bottom_floor(w));
  // a word ending in a plain B drops to a one-element vertex eventually:
  // B sends {1,2,3} to {1,3}, then E... spot-check a word that does not avoid
  CHECK_FALSE(avoids_bottom_floor(parse_word("E E B")));
}

TEST_CASE("dot export lists all seven vertices") {
  std::string dot = export_dot();
  for (const char* v : {"v123", "v12", "v13", "v23", "v1", "v2", "v3"})
    CHECK(dot.find(std::string(v) + " [label=") != std::string::npos);
  CHECK(dot.find("digraph") == 0);
}

#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "slchar/word.hpp"

namespace slchar {

/// Endomorphism of {1,2,3}; img[j-1] = sigma(j).
struct SigmaMap {
  std::array<int, 3> img{1, 2, 3};

  int operator()(int j) const { return img[j - 1]; }
  friend bool operator==(const SigmaMap&, const SigmaMap&) = default;
};

/// (a o b)(x) = a(b(x)).
SigmaMap compose(const SigmaMap& a, const SigmaMap& b);

SigmaMap sigma_letter(Letter g);

/// Anti-homomorphic product over the word (rightmost letter outermost in the
/// composition); rejects grouped steps.
SigmaMap sigma_word(const OperatorWord& w);

/// Non-empty subset of {1,2,3} as a bitmask (bit j-1 for element j).
using Vertex = unsigned;

Vertex sigma_image(const SigmaMap& s, Vertex v);

/// Vertices visited reading the word left to right, starting at {1,2,3}.
std::vector<Vertex> trace_path(const OperatorWord& w);

/// Letters from source vertex I grouped by equality of the vector-part
/// components indexed by I.
std::vector<std::vector<Letter>> arrow_groups(Vertex i);

/// The five good-word shapes of the main summation formula, instantiated at
/// (n, m, s) >= 0:
///   1: D^n A^m B L^s          2: D^n C A^m B L^s      3: D^n E^{m+1} L^s
///   4: D^n C A^m D (B+D+E) L^s   5: D^n A^{m+1} D (B+D+E) L^s
OperatorWord good_word(int shape, int n, int m, int s);

std::vector<std::tuple<int, int, int, int, OperatorWord>> enumerate_good_words(
    int nmax, int mmax, int smax);

/// True when every choice of letters inside grouped steps keeps the traced
/// path off the one-element floor.
bool avoids_bottom_floor(const OperatorWord& w);

std::string export_dot();

}  // namespace slchar

#pragma once

#include <string>
#include <vector>

#include "slchar/errors.hpp"

namespace slchar {

enum class Letter { A, B, C, D, E };

char letter_name(Letter g);

/// A word in the letters A..E, stored in reading order (leftmost step
/// first).  A step with several letters means the sum of the letters applied
/// to the same input, e.g. (B+D+E).  Application order is rightmost step
/// first.
struct OperatorWord {
  using Step = std::vector<Letter>;  // kept sorted, distinct
  std::vector<Step> steps;

  OperatorWord& append(const OperatorWord& tail) {
    steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
    return *this;
  }
  OperatorWord& append_power(const OperatorWord& w, int n) {
    for (int j = 0; j < n; ++j) append(w);
    return *this;
  }
  bool single_letters() const {
    for (const auto& s : steps)
      if (s.size() != 1) return false;
    return true;
  }
  std::string str() const;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

/// Parse words like "D^2 (C+D) D (B+D+E)" or "CBCAE".  Within a token,
/// letters compose left to right; `^n` repeats the preceding letter or
/// group.  `L` expands to (C+D) D (B+D+E) and `Lbar` to D (B+D+E) (C+D).
/// Throws InvalidConfig on malformed input.
OperatorWord parse_word(const std::string& text);

inline OperatorWord word_l() { return parse_word("(C+D) D (B+D+E)"); }
inline OperatorWord word_lbar() { return parse_word("D (B+D+E) (C+D)"); }

}  // namespace slchar

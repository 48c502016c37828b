#include "slchar/word.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace slchar {

char letter_name(Letter g) { return "ABCDE"[static_cast<int>(g)]; }

std::string OperatorWord::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : steps) {
    if (!first) os << " ";
    first = false;
    if (s.size() == 1) {
      os << letter_name(s[0]);
    } else {
      os << "(";
      for (size_t j = 0; j < s.size(); ++j) {
        if (j) os << "+";
        os << letter_name(s[j]);
      }
      os << ")";
    }
  }
  return os.str();
}

namespace {

std::optional<Letter> letter_of(char c) {
  switch (c) {
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    case 'C': return Letter::C;
    case 'D': return Letter::D;
    case 'E': return Letter::E;
    default: return std::nullopt;
  }
}

}  // namespace

OperatorWord parse_word(const std::string& text) {
  OperatorWord out;
  size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p])))
      ++p;
  };
  auto fail = [&](const std::string& why) {
    throw InvalidConfig("bad word '" + text + "' at position " +
                        std::to_string(p) + ": " + why);
  };

  while (skip_ws(), p < text.size()) {
    OperatorWord item;
    char c = text[p];
    if (c == 'L') {
      ++p;
      if (text.compare(p, 3, "bar") == 0) {
        p += 3;
        item = word_lbar();
      } else {
        item = word_l();
      }
    } else if (auto g = letter_of(c)) {
      ++p;
      item.steps.push_back({*g});
    } else if (c == '(') {
      ++p;
      OperatorWord::Step step;
      for (;;) {
        skip_ws();
        if (p >= text.size()) fail("unterminated group");
        auto g = letter_of(text[p]);
        if (!g) fail("expected a letter in group");
        step.push_back(*g);
        ++p;
        skip_ws();
        if (p >= text.size()) fail("unterminated group");
        if (text[p] == '+') {
          ++p;
          continue;
        }
        if (text[p] == ')') {
          ++p;
          break;
        }
        fail("expected '+' or ')'");
      }
      std::sort(step.begin(), step.end());
      step.erase(std::unique(step.begin(), step.end()), step.end());
      item.steps.push_back(std::move(step));
    } else {
      fail("unexpected character");
    }

    int n = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      bool braces = p < text.size() && text[p] == '{';
      if (braces) ++p;
      size_t start = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        ++p;
      if (p == start) fail("expected an exponent");
      n = std::stoi(text.substr(start, p - start));
      if (braces) {
        if (p >= text.size() || text[p] != '}') fail("expected '}'");
        ++p;
      }
    }
    out.append_power(item, n);
  }
  return out;
}

}  // namespace slchar

#include "slchar/graph.hpp"

#include <bit>
#include <map>
#include <sstream>

#include "slchar/monomial.hpp"

namespace slchar {

SigmaMap compose(const SigmaMap& a, const SigmaMap& b) {
  SigmaMap out;
  for (int j = 1; j <= 3; ++j) out.img[j - 1] = a(b(j));
  return out;
}

SigmaMap sigma_letter(Letter g) {
  switch (g) {
    case Letter::A: return {{1, 2, 1}};
    case Letter::B: return {{1, 3, 1}};
    case Letter::C: return {{2, 2, 1}};
    case Letter::D: return {{2, 3, 1}};
    default: return {{3, 3, 1}};
  }
}

SigmaMap sigma_word(const OperatorWord& w) {
  if (!w.single_letters())
    throw InvalidConfig("sigma is defined for single-letter steps only");
  SigmaMap s;  // identity
  for (const auto& step : w.steps) s = compose(sigma_letter(step[0]), s);
  return s;
}

Vertex sigma_image(const SigmaMap& s, Vertex v) {
  Vertex out = 0;
  for (int j = 1; j <= 3; ++j)
    if (v & (1u << (j - 1))) out |= 1u << (s(j) - 1);
  return out;
}

std::vector<Vertex> trace_path(const OperatorWord& w) {
  if (!w.single_letters())
    throw InvalidConfig("paths are traced for single-letter steps only");
  std::vector<Vertex> out{7};
  for (const auto& step : w.steps)
    out.push_back(sigma_image(sigma_letter(step[0]), out.back()));
  return out;
}

namespace {

// Vector-part templates of the letters: component j of G([P,Q,R]) is
// prefix * (P,Q,R)[source], up to the common shift.
struct Component {
  int source;
  Monomial prefix;
  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component&, const Component&) = default;
};

std::array<Component, 3> letter_template(Letter g) {
  const Monomial one = Monomial::one();
  const Monomial zz = Monomial::of(0, 1, 1);
  const Component tail{0, Monomial::of(-1, 0, 1)};  // q^{-1} z2 P
  switch (g) {
    case Letter::A: return {Component{0, one}, {1, one}, tail};
    case Letter::B: return {Component{0, one}, {2, one}, tail};
    case Letter::C: return {Component{1, zz}, {1, one}, tail};
    case Letter::D: return {Component{1, zz}, {2, one}, tail};
    default: return {Component{2, one}, {2, one}, tail};
  }
}

const std::array<Letter, 5> kLetters{Letter::A, Letter::B, Letter::C,
                                     Letter::D, Letter::E};

}  // namespace

std::vector<std::vector<Letter>> arrow_groups(Vertex i) {
  std::vector<std::vector<Letter>> groups;
  std::map<std::vector<Component>, size_t> seen;
  for (Letter g : kLetters) {
    auto tpl = letter_template(g);
    std::vector<Component> key;
    for (int j = 0; j < 3; ++j)
      if (i & (1u << j)) key.push_back(tpl[j]);
    auto [it, fresh] = seen.emplace(key, groups.size());
    if (fresh)
      groups.push_back({g});
    else
      groups[it->second].push_back(g);
  }
  return groups;
}

OperatorWord good_word(int shape, int n, int m, int s) {
  if (shape < 1 || shape > 5 || n < 0 || m < 0 || s < 0)
    throw InvalidConfig("bad good-word parameters");
  OperatorWord d = parse_word("D"), a = parse_word("A");
  OperatorWord w;
  w.append_power(d, n);
  switch (shape) {
    case 1:
      w.append_power(a, m).append(parse_word("B"));
      break;
    case 2:
      w.append(parse_word("C")).append_power(a, m).append(parse_word("B"));
      break;
    case 3:
      w.append_power(parse_word("E"), m + 1);
      break;
    case 4:
      w.append(parse_word("C")).append_power(a, m).append(
          parse_word("D (B+D+E)"));
      break;
    default:
      w.append_power(a, m + 1).append(parse_word("D (B+D+E)"));
      break;
  }
  w.append_power(word_l(), s);
  return w;
}

std::vector<std::tuple<int, int, int, int, OperatorWord>> enumerate_good_words(
    int nmax, int mmax, int smax) {
  std::vector<std::tuple<int, int, int, int, OperatorWord>> out;
  for (int shape = 1; shape <= 5; ++shape)
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= mmax; ++m)
        for (int s = 0; s <= smax; ++s)
          out.emplace_back(shape, n, m, s, good_word(shape, n, m, s));
  return out;
}

bool avoids_bottom_floor(const OperatorWord& w) {
  auto rec = [&](auto&& self, size_t pos, Vertex at) -> bool {
    if (std::popcount(at) == 1) return false;
    if (pos == w.steps.size()) return true;
    for (Letter g : w.steps[pos])
      if (!self(self, pos + 1, sigma_image(sigma_letter(g), at))) return false;
    return true;
  };
  return rec(rec, 0, 7);
}

std::string export_dot() {
  // Vertices by floor (larger subsets on top), then lexicographically.
  const std::vector<Vertex> order{7, 3, 5, 6, 1, 2, 4};
  auto name = [](Vertex v) {
    std::string s;
    for (int j = 0; j < 3; ++j)
      if (v & (1u << j)) s += static_cast<char>('1' + j);
    return s;
  };
  std::ostringstream os;
  os << "digraph summation {\n";
  os << "  rankdir=TB;\n";
  for (Vertex v : order) os << "  v" << name(v) << " [label=\"(" << name(v)
                            << ")\"];\n";
  for (Vertex v : order) {
    for (const auto& group : arrow_groups(v)) {
      Vertex to = sigma_image(sigma_letter(group[0]), v);
      os << "  v" << name(v) << " -> v" << name(to) << " [label=\"";
      for (size_t j = 0; j < group.size(); ++j) {
        if (j) os << "+";
        os << letter_name(group[j]);
      }
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace slchar

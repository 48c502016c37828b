#include "slchar/families.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <sstream>

#include "slchar/operators.hpp"

#ifndef SLCHAR_FAMILY_TABLE
#error "SLCHAR_FAMILY_TABLE must point at the family data file"
#endif

namespace slchar {

long long quad_form2(QuadId id, int n, int m, int s) {
  long long N = n, M = m, S = s;
  switch (id) {
    case kAlpha:
      return 6 * (N + S) * (N + S) + 4 * M * S;
    case kBeta:
      return 6 * (N + S) * (N + S) + 2 * M * M + 8 * M * S + 6 * M * N;
    case kGamma:
      return 21 * N * N + M * M + 13 * S * S + 6 * N * M + 30 * N * S +
             10 * M * S;
    default:
      return 11 * N * N + 3 * M * M + 10 * S * S + 10 * N * M + 20 * N * S +
             12 * M * S;
  }
}

long long LinExpr::eval2(int n, int m, int s) const {
  long long v = c2[0] + c2[1] * n + c2[2] * m + c2[3] * s;
  for (int j = 0; j < 4; ++j)
    if (quad[j]) v += quad[j] * quad_form2(static_cast<QuadId>(j), n, m, s);
  return v;
}

long long LinExpr::eval_int(int n, int m, int s) const {
  long long v = eval2(n, m, s);
  if (v % 2 != 0)
    throw FormulaTranscriptionError("half-integer exponent survives at n=" +
                                    std::to_string(n) + " m=" +
                                    std::to_string(m) + " s=" +
                                    std::to_string(s));
  return v / 2;
}

LinExpr parse_lin_expr(const std::string& text) {
  LinExpr e;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw FormulaTranscriptionError("bad exponent expression \"" + text +
                                    "\": " + why);
  };
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    long long num = 1, den = 1;
    bool have_number = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        num = num * 10 + (text[i++] - '0');
      have_number = true;
      if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size() || text[i] != '2')
          fail("only halves are supported");
        den = 2;
        ++i;
      }
    }
    std::string ident;
    while (i < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[i])))
      ident += text[i++];
    if (ident.empty()) {
      if (!have_number) fail("expected a term");
      e.c2[0] += sign * num * 2 / den;
      continue;
    }
    int var = ident == "n" ? 1 : ident == "m" ? 2 : ident == "s" ? 3 : 0;
    if (var) {
      e.c2[var] += sign * num * 2 / den;
      continue;
    }
    int quad = ident == "alpha"   ? kAlpha
               : ident == "beta"  ? kBeta
               : ident == "gamma" ? kGamma
               : ident == "delta" ? kDelta
                                  : -1;
    if (quad < 0) fail("unknown symbol " + ident);
    if (have_number || den != 1 || sign != 1)
      fail("quadratic symbols only enter with coefficient 1");
    e.quad[quad] += 1;
  }
  return e;
}

Monomial MonomialTemplate::eval(int n, int m, int s) const {
  return Monomial::of(static_cast<int>(q.eval_int(n, m, s)),
                      static_cast<int>(z1.eval_int(n, m, s)),
                      static_cast<int>(z2.eval_int(n, m, s)));
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

MonomialTemplate parse_mono_template(const std::string& text) {
  MonomialTemplate out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    LinExpr* slot = name == "q"    ? &out.q
                    : name == "z1" ? &out.z1
                    : name == "z2" ? &out.z2
                                   : nullptr;
    if (!slot)
      throw FormulaTranscriptionError("unknown variable \"" + name + "\"");
    LinExpr e;
    if (caret == std::string::npos) {
      e.c2[0] = 2;  // exponent 1
    } else {
      std::string exp = tok.substr(caret + 1);
      if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}')
        exp = exp.substr(1, exp.size() - 2);
      e = parse_lin_expr(exp);
    }
    for (int j = 0; j < 4; ++j) {
      slot->c2[j] += e.c2[j];
      slot->quad[j] += e.quad[j];
    }
  }
  return out;
}

/// "{q^{3n+m+s} z1 z2}_{s}" -> base template and optional length.
std::pair<MonomialTemplate, std::optional<LinExpr>> parse_poch_text(
    const std::string& text) {
  size_t open = text.find('{');
  if (open == std::string::npos)
    throw FormulaTranscriptionError("missing { in factor \"" + text + "\"");
  int depth = 0;
  size_t close = open;
  for (; close < text.size(); ++close) {
    if (text[close] == '{') ++depth;
    if (text[close] == '}' && --depth == 0) break;
  }
  if (depth != 0)
    throw FormulaTranscriptionError("unbalanced braces in \"" + text + "\"");
  MonomialTemplate base =
      parse_mono_template(text.substr(open + 1, close - open - 1));
  std::string rest = trim(text.substr(close + 1));
  if (rest.empty()) return {base, std::nullopt};
  if (rest.size() < 4 || rest[0] != '_' || rest[1] != '{' ||
      rest.back() != '}')
    throw FormulaTranscriptionError("bad length suffix in \"" + text + "\"");
  return {base, parse_lin_expr(rest.substr(2, rest.size() - 3))};
}

std::vector<FamilyRecord> load_family_table() {
  std::ifstream in(SLCHAR_FAMILY_TABLE);
  if (!in)
    throw FormulaTranscriptionError("cannot open " +
                                    std::string(SLCHAR_FAMILY_TABLE));
  std::vector<FamilyRecord> out;
  FamilyRecord cur;
  bool open = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw FormulaTranscriptionError("line " + std::to_string(lineno) + ": " +
                                    why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string head;
    is >> head;
    std::string rest;
    std::getline(is, rest);
    rest = trim(rest);
    if (head == "family") {
      if (open) fail("missing end before new family");
      cur = FamilyRecord{};
      cur.id = std::stoi(rest);
      open = true;
    } else if (!open) {
      fail("directive outside a family block");
    } else if (head == "word") {
      cur.shape = rest;
    } else if (head == "domain") {
      std::istringstream ds(rest);
      std::string tok;
      while (ds >> tok) {
        size_t ge = tok.find(">=");
        if (ge == std::string::npos) fail("bad domain token " + tok);
        std::string var = tok.substr(0, ge);
        int lo = std::stoi(tok.substr(ge + 2));
        if (var == "n")
          cur.nmin = lo;
        else if (var == "m")
          cur.mmin = lo;
        else if (var == "s")
          cur.smin = lo;
        else
          fail("bad domain variable " + var);
      }
    } else if (head == "sign") {
      cur.sign_exp = parse_lin_expr(rest);
    } else if (head == "pre") {
      cur.pre = parse_mono_template(rest);
    } else if (head == "x") {
      cur.x = parse_mono_template(rest);
    } else if (head == "v2") {
      cur.v2 = parse_mono_template(rest);
    } else if (head == "v3") {
      cur.v3 = parse_mono_template(rest);
    } else if (head == "num" || head == "den") {
      int sign = head == "num" ? 1 : -1;
      std::istringstream fs(rest);
      std::string kind;
      fs >> kind;
      std::string body;
      std::getline(fs, body);
      auto [base, len] = parse_poch_text(trim(body));
      if (kind == "poch") {
        if (!len) fail("poch factor needs a length");
        cur.poch.push_back({base, len, sign});
      } else if (kind == "inf") {
        if (len) fail("inf factor takes no length");
        cur.poch.push_back({base, std::nullopt, sign});
      } else if (kind == "lin") {
        if (sign != 1) fail("lin factors only appear in the numerator");
        if (len) fail("lin factor takes no length");
        cur.numlin.push_back(base);
      } else {
        fail("unknown factor kind " + kind);
      }
    } else if (head == "end") {
      out.push_back(cur);
      open = false;
    } else {
      fail("unknown directive " + head);
    }
  }
  if (open) throw FormulaTranscriptionError("unterminated family block");
  if (out.size() != 18)
    throw FormulaTranscriptionError("expected 18 families, found " +
                                    std::to_string(out.size()));
  for (size_t j = 0; j < out.size(); ++j)
    if (out[j].id != static_cast<int>(j) + 1)
      throw FormulaTranscriptionError("family ids must run 1..18 in order");
  return out;
}

}  // namespace

const std::vector<FamilyRecord>& family_table() {
  static const std::vector<FamilyRecord> table = load_family_table();
  return table;
}

OperatorWord instantiate_shape(const std::string& shape, int n, int m, int s) {
  OperatorWord out;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw FormulaTranscriptionError("shape \"" + shape + "\" at position " +
                                    std::to_string(i) + ": " + why);
  };
  while (i < shape.size()) {
    if (std::isspace(static_cast<unsigned char>(shape[i]))) {
      ++i;
      continue;
    }
    OperatorWord base;
    if (shape.compare(i, 4, "Lbar") == 0) {
      base = word_lbar();
      i += 4;
    } else if (shape[i] == 'L') {
      base = word_l();
      i += 1;
    } else if (shape[i] >= 'A' && shape[i] <= 'E') {
      base.steps.push_back({static_cast<Letter>(shape[i] - 'A')});
      i += 1;
    } else if (shape[i] == '(') {
      OperatorWord::Step step;
      ++i;
      while (i < shape.size() && shape[i] != ')') {
        if (shape[i] >= 'A' && shape[i] <= 'E')
          step.push_back(static_cast<Letter>(shape[i] - 'A'));
        else if (shape[i] != '+')
          fail("unexpected character in group");
        ++i;
      }
      if (i == shape.size()) fail("unterminated group");
      ++i;
      std::sort(step.begin(), step.end());
      step.erase(std::unique(step.begin(), step.end()), step.end());
      if (step.empty()) fail("empty group");
      base.steps.push_back(step);
    } else {
      fail("unexpected character");
    }
    long long e = 1;
    if (i < shape.size() && shape[i] == '^') {
      ++i;
      if (i < shape.size() && shape[i] == '{') {
        size_t close = shape.find('}', i);
        if (close == std::string::npos) fail("unterminated exponent");
        e = parse_lin_expr(shape.substr(i + 1, close - i - 1))
                .eval_int(n, m, s);
        i = close + 1;
      } else {
        size_t start = i;
        while (i < shape.size() &&
               std::isdigit(static_cast<unsigned char>(shape[i])))
          ++i;
        if (i == start) fail("missing exponent");
        e = std::stoll(shape.substr(start, i - start));
      }
    }
    if (e < 0) fail("negative power at n=" + std::to_string(n) + " m=" +
                    std::to_string(m) + " s=" + std::to_string(s));
    out.append_power(base, static_cast<int>(e));
  }
  return out;
}

FactoredRational family_scalar(const FamilyRecord& f, int n, int m, int s) {
  if (!f.in_domain(n, m, s))
    throw InvalidConfig("family " + std::to_string(f.id) +
                        " is undefined at this (n, m, s)");
  long long se = f.sign_exp.eval_int(n, m, s);
  FactoredRational g = FactoredRational::from_monomial(
      f.pre.eval(n, m, s), ((se % 2) + 2) % 2 == 0 ? 1 : -1);
  for (const PochTemplate& p : f.poch) {
    Monomial base = p.base.eval(n, m, s);
    if (p.len) {
      long long len = p.len->eval_int(n, m, s);
      if (len < 0)
        throw FormulaTranscriptionError(
            "negative Pochhammer length in family " + std::to_string(f.id));
      for (long long j = 0; j < len; ++j)
        g.mul_lin(Monomial::of(static_cast<int>(j)) * base, p.sign);
    } else {
      g.mul_inf(base, p.sign);
    }
  }
  for (const MonomialTemplate& t : f.numlin) g.mul_lin(t.eval(n, m, s), 1);
  return g;
}

void assert_linear_factor_shapes(const FactoredRational& f) {
  auto ok = [](const Monomial& b) {
    if (!b.is_finite() || b.t != 0) return false;
    if (b.z1 == 0 && b.z2 == 0) return b.q >= 1;        // q^a
    if (b.z1 == -1 && b.z2 == 0) return b.q >= 0;       // q^a / z1
    if (b.z1 == 0 && b.z2 == 1) return b.q >= 0;        // q^a z2
    if (b.z1 == 1 && (b.z2 == 1 || b.z2 == 2)) return b.q >= 0;
    return false;
  };
  for (const auto& [b, e] : f.lin)
    if (!ok(b))
      throw FormulaTranscriptionError("unexpected linear factor base " +
                                      b.str());
  for (const auto& [b, e] : f.inf)
    if (!ok(b))
      throw FormulaTranscriptionError("unexpected infinite product base " +
                                      b.str());
}

CharacterVector family_term_closed(int fid, int n, int m, int s, int k,
                                   TruncationPolicy policy) {
  const FamilyRecord& f = family_table().at(fid - 1);
  FactoredRational g = family_scalar(f, n, m, s);
  assert_linear_factor_shapes(g);
  Monomial x = f.x.eval(n, m, s);
  Monomial v2 = f.v2.eval(n, m, s);
  Monomial v3 = f.v3.eval(n, m, s);
  CharacterVector out = CharacterVector::zero(k, policy);
  for (StateIndex st : all_states(k)) {
    FactoredRational c = g;
    c.mul_mono(x.pow(k) * v2.pow(st.l - st.i) * v3.pow(st.i));
    out.at(st) = fr_to_series(c, policy);
  }
  return out;
}

CharacterVector family_term_operator(int fid, int n, int m, int s, int k,
                                     TruncationPolicy policy) {
  const FamilyRecord& f = family_table().at(fid - 1);
  if (!f.in_domain(n, m, s))
    throw InvalidConfig("family " + std::to_string(fid) +
                        " is undefined at this (n, m, s)");
  OperatorWord w = instantiate_shape(f.shape, n, m, s);
  return to_character(apply_word(w, v_infinity(policy)), k, policy);
}

namespace {

/// Lower bound on the q-degree any state component of the family term can
/// reach: expansions of the canonical factors never lower q, so only the
/// numerator and the vector part count.
long long term_degree_bound(const FactoredRational& g, const Monomial& x,
                            const Monomial& v2, const Monomial& v3, int k) {
  if (g.is_zero()) return LLONG_MAX;
  long long mn = LLONG_MAX;
  for (const auto& [mono, c] : g.numer.terms)
    mn = std::min(mn, static_cast<long long>(mono.q));
  long long vmin = std::min({0, v2.q, v3.q});
  return mn + static_cast<long long>(k) * (x.q + vmin);
}

void accumulate(CharacterVector& acc, const CharacterVector& term) {
  for (size_t j = 0; j < acc.comp.size(); ++j) acc.comp[j] += term.comp[j];
}

}  // namespace

CharacterVector bosonic_sum_character(int k, TruncationPolicy policy,
                                       Route route) {
  CharacterVector out = CharacterVector::zero(k, policy);
  const int shell_cap = 80;
  int empty_streak = 0;
  for (int shell = 0;; ++shell) {
    if (shell > shell_cap)
      throw ShellBoundExceeded("no empty shell up to n+m+s = " +
                               std::to_string(shell_cap));
    bool any = false;
    for (const FamilyRecord& f : family_table()) {
      for (int n = 0; n <= shell; ++n) {
        for (int m = 0; n + m <= shell; ++m) {
          int s = shell - n - m;
          if (!f.in_domain(n, m, s)) continue;
          FactoredRational g = family_scalar(f, n, m, s);
          long long bound =
              term_degree_bound(g, f.x.eval(n, m, s), f.v2.eval(n, m, s),
                                f.v3.eval(n, m, s), k);
          if (bound > policy.qmax) continue;
          any = true;
          if (route == Route::Closed)
            accumulate(out, family_term_closed(f.id, n, m, s, k, policy));
          else
            accumulate(out, family_term_operator(f.id, n, m, s, k, policy));
        }
      }
    }
    if (any)
      empty_streak = 0;
    else if (++empty_streak >= 2)
      break;
  }
  return out;
}

bool jackson_check(const Monomial& x, const Monomial& y,
                   TruncationPolicy policy) {
  const Monomial q1 = Monomial::of(1);
  FactoredRational lhs = FactoredRational::from_monomial(Monomial::one());
  lhs.mul_inf(q1, 1);
  lhs.mul_inf(q1 * x, -1);
  lhs.mul_inf(q1 * y, -1);
  TruncatedSeries l = fr_to_series(lhs, policy);

  TruncatedSeries r = TruncatedSeries::zero(policy);
  for (int n = 1; n * (n - 1) / 2 <= policy.qmax; ++n) {
    FactoredRational t = FactoredRational::from_monomial(
        Monomial::of(n * (n - 1) / 2), n % 2 == 1 ? 1 : -1);
    t.mul_lin(Monomial::of(2 * n) * x * y, 1);
    for (int j = 1; j <= n - 1; ++j) t.mul_lin(Monomial::of(j), -1);
    t.mul_inf(Monomial::of(n + 1) * x * y, -1);
    t.mul_lin(Monomial::of(n) * x, -1);
    t.mul_lin(Monomial::of(n) * y, -1);
    r += fr_to_series(t, policy);
  }
  return l == r;
}

namespace {

const char* const kPairsA[9][2] = {
    {"A D^{3n+3} A^{m} B L^{s}", "A D^{3n+2} C A^{m} B L^{s}"},
    {"A D^{3n+1} A^{m+1} B L^{s}", "A D^{3n+1} C A^{m} B L^{s}"},
    {"A D^{3n+2} A^{m} B L^{s+1}", "A D^{3n+2} A^{m+1} D (B+D+E) L^{s}"},
    {"A D^{3n} C A^{m} B L^{s}", "A D^{3n} C A^{m} D (B+D+E) L^{s}"},
    {"A D^{3n} E^{2m+1} L^{s}", "A D^{3n} E^{2m+2} L^{s}"},
    {"A D^{3n+1} E^{2m+3} L^{s}", "A D^{3n+2} E^{2m+2} L^{s}"},
    {"A D^{3n+2} E^{2m+1} L^{s}", "A D^{3n+1} E^{2m+2} L^{s}"},
    {"A D^{3n+3} A^{m+1} D (B+D+E) L^{s}",
     "A D^{3n+2} C A^{m+1} D (B+D+E) L^{s}"},
    {"A D^{3n+1} A^{m+1} D (B+D+E) L^{s}",
     "A D^{3n+1} C A^{m} D (B+D+E) L^{s}"},
};

const char* const kPairsB[9][2] = {
    {"B D^{3n} A^{m} B L^{s+1}", "B D^{3n} A^{m+1} D (B+D+E) L^{s}"},
    {"B D^{3n+1} A^{m} B L^{s}", "B D^{3n} C A^{m} B L^{s}"},
    {"B D^{3n+2} A^{m+1} B L^{s}", "B D^{3n+2} C A^{m} B L^{s}"},
    {"B D^{3n+1} C A^{m} B L^{s}", "B D^{3n+1} C A^{m} D (B+D+E) L^{s}"},
    {"B D^{3n+3} E^{2m+1} L^{s}", "B D^{3n+2} E^{2m+2} L^{s}"},
    {"B D^{3n+1} E^{2m+1} L^{s}", "B D^{3n+1} E^{2m+2} L^{s}"},
    {"B D^{3n+2} E^{2m+3} L^{s}", "B D^{3n+3} E^{2m+2} L^{s}"},
    {"B D^{3n+1} A^{m+1} D (B+D+E) L^{s}",
     "B D^{3n} C A^{m+1} D (B+D+E) L^{s}"},
    {"B D^{3n+2} A^{m+1} D (B+D+E) L^{s}",
     "B D^{3n+2} C A^{m} D (B+D+E) L^{s}"},
};

}  // namespace

std::pair<std::string, std::string> cancellation_pair(int pid) {
  if (pid < 0 || pid >= 36) throw InvalidConfig("pair index out of range");
  int block = pid / 9, j = pid % 9;
  std::string a = block < 2 ? kPairsA[j][0] : kPairsB[j][0];
  std::string b = block < 2 ? kPairsA[j][1] : kPairsB[j][1];
  if (block == 1) a[0] = b[0] = 'C';
  if (block == 3) a[0] = b[0] = 'E';
  return {a, b};
}

bool cancellation_check(int pid, int n, int m, int s, int k,
                        TruncationPolicy policy) {
  auto [wa, wb] = cancellation_pair(pid);
  CharacterVector ca = to_character(
      apply_word(instantiate_shape(wa, n, m, s), v_infinity(policy)), k,
      policy);
  CharacterVector cb = to_character(
      apply_word(instantiate_shape(wb, n, m, s), v_infinity(policy)), k,
      policy);
  for (size_t j = 0; j < ca.comp.size(); ++j)
    if (!(ca.comp[j] + cb.comp[j]).is_zero()) return false;
  return true;
}

bool word_kills_v_infinity(const std::string& word, int k,
                           TruncationPolicy policy) {
  CharacterVector c = to_character(
      apply_word(parse_word(word), v_infinity(policy)), k, policy);
  for (const TruncatedSeries& t : c.comp)
    if (!t.is_zero()) return false;
  return true;
}

bool anb_closed_form_check(int n, int m, int k, TruncationPolicy policy) {
  OperatorWord w;
  w.append_power(parse_word("A"), n)
      .append(parse_word("B"))
      .append_power(parse_word("(A+B)"), m);
  VectorSum state{SimpleVector::bracket(Monomial::one(), Monomial::zero(),
                                        Monomial::of(0, 0, 1))};
  CharacterVector lhs = to_character(apply_word(w, state), k, policy);

  FactoredRational g = FactoredRational::from_monomial(Monomial::one());
  g.mul_lin(Monomial::of(n + 1, 0, 1), -1);
  for (int j = -n; j <= m; ++j)
    if (j != 0) g.mul_lin(Monomial::of(j), -1);
  for (int j = n + 2; j <= 2 * n + m + 2; ++j)
    if (j != 2 * n + 2) g.mul_lin(Monomial::of(j, 1, 2), -1);

  const Monomial p = Monomial::one(), q = Monomial::of(n + 1, 0, 1),
                 r = Monomial::of(0, 0, 1);
  CharacterVector rhs = CharacterVector::zero(k, policy);
  for (StateIndex st : all_states(k)) {
    FactoredRational c = g;
    c.mul_mono(p.pow(k - st.l) * q.pow(st.l - st.i) * r.pow(st.i));
    rhs.at(st) = fr_to_series(c, policy);
  }
  return lhs == rhs;
}

}  // namespace slchar

// Command-line front end: compute characters by any of the five methods,
// compare methods against each other, run the verification suites, apply
// operator words, and export the summation graph.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slchar/families.hpp"
#include "slchar/graph.hpp"
#include "slchar/operators.hpp"
#include "slchar/paths.hpp"
#include "slchar/transfer.hpp"

using json = nlohmann::ordered_json;
using namespace slchar;

namespace {

enum class Method { Recursion, FixedPoint, Oracle, BosonicClosed, BosonicOperator };

Method parse_method(const std::string& name) {
  if (name == "recursion") return Method::Recursion;
  if (name == "fixed-point") return Method::FixedPoint;
  if (name == "oracle") return Method::Oracle;
  if (name == "bosonic-closed") return Method::BosonicClosed;
  if (name == "bosonic-operator") return Method::BosonicOperator;
  throw InvalidConfig("unknown method '" + name +
                      "' (expected recursion, fixed-point, oracle, "
                      "bosonic-closed or bosonic-operator)");
}

bool needs_z2max(Method m) {
  return m == Method::FixedPoint || m == Method::BosonicOperator;
}

CharacterVector compute(Method m, int k, TruncationPolicy policy) {
  if (needs_z2max(m) && !policy.z2max)
    throw InvalidConfig("this method solves degree by degree in z2 and needs "
                        "--z2max");
  switch (m) {
    case Method::Recursion:
      return limit_character(k, policy);
    case Method::FixedPoint:
      return fixed_point_character(k, policy);
    case Method::Oracle: {
      CharacterVector v = CharacterVector::zero(k, policy);
      for (StateIndex s : all_states(k))
        v.at(s) = oracle_character(k, s.l, s.i, policy);
      return v;
    }
    case Method::BosonicClosed:
      return bosonic_sum_character(k, policy, Route::Closed);
    default:
      return bosonic_sum_character(k, policy, Route::Operator);
  }
}

json terms_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const auto& [key, c] : s.terms()) {
    json t;
    t["q"] = key[0];
    t["z1"] = key[1];
    t["z2"] = key[2];
    t["coeff"] = c.str();
    arr.push_back(std::move(t));
  }
  return arr;
}

void write_csv(std::ostream& os, const TruncatedSeries& s) {
  os << "q,z1,z2,coeff\n";
  for (const auto& [key, c] : s.terms())
    os << key[0] << "," << key[1] << "," << key[2] << "," << c.str() << "\n";
}

void write_table(std::ostream& os, const TruncatedSeries& s) {
  for (const auto& [key, c] : s.terms())
    os << c.str() << " * " << Monomial::of(key[0], key[1], key[2]).str()
       << "\n";
  if (s.terms().empty()) os << "0\n";
}

void emit(const std::string& format, const std::string& out, const json& doc,
          const TruncatedSeries& series) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty() && out != "-") {
    file.open(out);
    if (!file) throw InvalidConfig("cannot open output file " + out);
    os = &file;
  }
  if (format == "json")
    *os << doc.dump(2) << "\n";
  else if (format == "csv")
    write_csv(*os, series);
  else if (format == "table")
    write_table(*os, series);
  else
    throw InvalidConfig("unknown format '" + format + "'");
}

int resolve_threads(int flag_value) {
  if (const char* env = std::getenv("SLCHAR_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return flag_value > 0 ? flag_value : 1;
}

// ---- verification suites ------------------------------------------------

struct SuiteReport {
  int passed = 0, failed = 0;
  std::ostringstream log;

  void check(bool ok, const std::string& what) {
    (ok ? passed : failed) += 1;
    log << (ok ? "  ok   " : "  FAIL ") << what << "\n";
  }
};

void suite_lemmas(SuiteReport& r, int qmax) {
  TruncationPolicy pol{qmax, std::nullopt, std::nullopt};
  Monomial x = Monomial::of(1, 1, 0), y = Monomial::of(2, -1, 1);
  bool tri = true, rect = true;
  for (int a = -2; a <= 2; ++a) {
    for (int b = a; b <= 2; ++b) tri &= triangle_lemma_check(x, y, a, b, pol);
    for (int b = a - 1; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = c - 1; d <= 2; ++d)
          rect &= rectangle_lemma_check(x, y, a, b, c, d, pol);
  }
  r.check(tri, "triangle vertex expansion, corners in [-2,2]");
  r.check(rect, "rectangle vertex expansion, corners in [-2,2]");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dq(1, 3), dz1(-2, 2), dz2(0, 2), dc(-3, 3);
  bool rnd = true;
  for (int t = 0; t < 10; ++t) {
    Monomial rx = Monomial::of(dq(rng), dz1(rng), dz2(rng));
    Monomial ry = Monomial::of(dq(rng), dz1(rng), dz2(rng));
    int a = dc(rng), b = a + t % 3, c = dc(rng), d = c + (t + 1) % 3;
    rnd &= triangle_lemma_check(rx, ry, a, b, pol);
    rnd &= rectangle_lemma_check(rx, ry, a, b, c, d, pol);
  }
  r.check(rnd, "randomized monomial assignments");
}

void suite_jackson(SuiteReport& r, int qmax) {
  TruncationPolicy pol{qmax, std::nullopt, std::nullopt};
  struct Case {
    Monomial x, y;
    const char* name;
  };
  const Case cases[] = {
      {Monomial::of(2, 1, 2), Monomial::one(), "(q^2 z1 z2^2, 1)"},
      {Monomial::of(1), Monomial::of(2), "(q, q^2)"},
      {Monomial::of(1, 0, 1), Monomial::of(1), "(q z2, q)"},
  };
  for (const Case& c : cases)
    r.check(jackson_check(c.x, c.y, pol), std::string("jackson ") + c.name);
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> dq(0, 2), dz1(0, 1), dz2(0, 2);
  bool rnd = true;
  for (int t = 0; t < 8; ++t) {
    Monomial x = Monomial::of(dq(rng), dz1(rng), dz2(rng));
    Monomial y = Monomial::of(dq(rng), dz1(rng), dz2(rng));
    rnd &= jackson_check(x, y, pol);
  }
  r.check(rnd, "jackson, randomized Small pairs");
}

bool matches_tail_vector(const VectorSum& got, int n, int k,
                         TruncationPolicy policy) {
  SimpleVector want;
  want.scalar = v_infinity_scalar(n);
  want.part = {Monomial::one(), Monomial::of(n, 0, 1), Monomial::of(0, 0, 1)};
  return to_character(got, k, policy) == to_character({want}, k, policy);
}

void suite_stable(SuiteReport& r, int qmax) {
  TruncationPolicy pol{qmax, std::nullopt, 2 * qmax + 6};
  const int k = 1;
  VectorSum vinf = v_infinity(pol);
  r.check(to_character(apply_word(parse_word("(A+B)"), vinf), k, pol) ==
              to_character(vinf, k, pol),
          "(A+B) v_inf = v_inf");
  r.check(matches_tail_vector(apply_word(parse_word("B"), vinf), 1, k, pol),
          "B v_inf = f_1 v_1");
  for (int n = 1; n <= 4; ++n) {
    SimpleVector f1;
    f1.scalar = v_infinity_scalar(1);
    f1.part = {Monomial::one(), Monomial::of(1, 0, 1), Monomial::of(0, 0, 1)};
    OperatorWord w;
    w.append_power(parse_word("A"), n);
    r.check(matches_tail_vector(apply_word(w, {f1}), n + 1, k, pol),
            "A^" + std::to_string(n) + " f_1 v_1 = f_" + std::to_string(n + 1) +
                " v_" + std::to_string(n + 1));
  }
}

void suite_pentagon(SuiteReport& r, int qmax) {
  for (int k = 1; k <= 2; ++k) {
    TruncationPolicy pol{qmax, std::nullopt, 2 * qmax + 2 * k + 6};
    r.check(pentagon_check(SimpleVector::bracket(Monomial::one(),
                                                 Monomial::of(1, 0, 1),
                                                 Monomial::of(0, 0, 1)),
                           k, pol),
            "M S = A+B+C+D+E on [1, q z2, z2], k=" + std::to_string(k));
    r.check(pentagon_check(SimpleVector::bracket(Monomial::one(),
                                                 Monomial::of(2, 0, 1),
                                                 Monomial::of(1, 0, 2)),
                           k, pol),
            "M S = A+B+C+D+E on [1, q^2 z2, q z2^2], k=" + std::to_string(k));
  }
}

void suite_cancellations(SuiteReport& r, int qmax) {
  TruncationPolicy pol{qmax, std::nullopt, 2 * qmax + 8};
  const int k = 1;
  for (int pid = 0; pid < 36; pid += 4) {
    auto [left, right] = cancellation_pair(pid);
    r.check(cancellation_check(pid, 0, 0, 0, k, pol),
            "pair " + std::to_string(pid) + ": " + left + "  +  " + right);
  }
  {
    VectorSum vinf = v_infinity(pol);
    CharacterVector a =
        to_character(apply_word(parse_word("C E"), vinf), k, pol);
    CharacterVector b =
        to_character(apply_word(parse_word("C E E"), vinf), k, pol);
    bool zero = true;
    for (StateIndex s : all_states(k))
      zero &= (a.at(s) + b.at(s)).is_zero();
    r.check(zero, "CE v_inf + CE^2 v_inf = 0");
  }
}

void suite_operator_identities(SuiteReport& r, int qmax) {
  TruncationPolicy pol{qmax, std::nullopt, 2 * qmax + 8};
  const int k = 1;
  for (const char* x : {"A", "C"}) {
    for (int m = 0; m <= 1; ++m) {
      std::string w = std::string(x);
      for (int j = 0; j < m; ++j) w += " Lbar";
      r.check(word_kills_v_infinity(w + " D (A+C)", k, pol),
              w + " D (A+C) kills v_inf");
    }
    // The B-shaped identity needs at least one Lbar: at m = 0 the word is
    // XB, and ABv_inf = f_2 v_2 is nonzero by the fixed-vector lemma.
    for (int m = 1; m <= 2; ++m) {
      std::string w = std::string(x);
      for (int j = 0; j < m; ++j) w += " Lbar";
      r.check(word_kills_v_infinity(w + " B", k, pol),
              w + " B kills v_inf");
    }
  }
  for (const char* y : {"B", "E"}) {
    for (int m = 0; m <= 1; ++m) {
      std::string w = std::string(y);
      for (int j = 0; j < m; ++j) w += " L";
      r.check(word_kills_v_infinity(w + " (C+D) D (A+C)", k, pol),
              w + " (C+D) D (A+C) kills v_inf");
      r.check(word_kills_v_infinity(w + " (C+D) B", k, pol),
              w + " (C+D) B kills v_inf");
    }
  }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      r.check(anb_closed_form_check(n, m, k, pol),
              "A^" + std::to_string(n) + " B (A+B)^" + std::to_string(m) +
                  " closed form");
}

int run_verify(const std::string& suite, int qmax) {
  SuiteReport r;
  auto want = [&](const std::string& s) {
    return suite == "all" || suite == s;
  };
  if (want("lemmas")) suite_lemmas(r, qmax);
  if (want("jackson")) suite_jackson(r, std::max(qmax, 12));
  if (want("stable")) suite_stable(r, std::min(qmax, 10));
  if (want("pentagon")) suite_pentagon(r, std::min(qmax, 8));
  if (want("cancellations")) suite_cancellations(r, std::min(qmax, 8));
  if (want("operator-identities"))
    suite_operator_identities(r, std::min(qmax, 8));
  if (r.passed + r.failed == 0)
    throw InvalidConfig("unknown suite '" + suite +
                        "' (expected lemmas, jackson, stable, pentagon, "
                        "cancellations, operator-identities or all)");
  std::cout << "suite " << suite << ":\n" << r.log.str();
  std::cout << r.passed << " passed, " << r.failed << " failed\n";
  return r.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series characters of level-k lattice paths"};
  app.require_subcommand(1);

  int k = 1, i = 0, l = 0, qmax = 8, threads = 1;
  std::optional<int> z1min, z2max;
  std::string method = "recursion", methods = "recursion,oracle";
  std::string format = "json", out, suite = "all", word_text, dot_file;
  bool trace = false;

  auto add_window_flags = [&](CLI::App* cmd) {
    cmd->add_option("--qmax", qmax, "truncation order in q");
    cmd->add_option("--z1min", z1min, "lowest kept z1 exponent");
    cmd->add_option("--z2max", z2max, "highest kept z2 exponent");
    cmd->add_option("--threads", threads, "worker threads (SLCHAR_THREADS overrides)");
  };

  CLI::App* c_char = app.add_subcommand("character", "one component chi_{i,l}");
  c_char->add_option("--k", k, "level")->required();
  c_char->add_option("--i", i, "state index i");
  c_char->add_option("--l", l, "state index l");
  c_char->add_option("--method", method, "computation method");
  c_char->add_option("--format", format, "json, csv or table");
  c_char->add_option("--out", out, "output file (default stdout)");
  add_window_flags(c_char);

  CLI::App* c_full = app.add_subcommand(
      "full-character", "chi_l(q,z) via the z1 -> z, z2 -> 1/z substitution");
  c_full->add_option("--k", k, "level")->required();
  c_full->add_option("--l", l, "state index l");
  c_full->add_option("--method", method, "computation method");
  c_full->add_option("--format", format, "json, csv or table");
  c_full->add_option("--out", out, "output file (default stdout)");
  add_window_flags(c_full);

  CLI::App* c_cmp = app.add_subcommand("compare", "cross-check methods");
  c_cmp->add_option("--k", k, "level")->required();
  c_cmp->add_option("--methods", methods, "comma-separated method list");
  add_window_flags(c_cmp);

  CLI::App* c_ver = app.add_subcommand("verify", "run a verification suite");
  c_ver->add_option("--suite", suite,
                    "lemmas, jackson, stable, pentagon, cancellations, "
                    "operator-identities or all");
  add_window_flags(c_ver);

  CLI::App* c_word = app.add_subcommand("word", "apply an operator word");
  c_word->add_option("--apply", word_text, "word, e.g. \"D^2 (C+D) D (B+D+E)\"")
      ->required();
  c_word->add_flag("--trace", trace, "print the vertex trace of the word");
  c_word->add_option("--k", k, "level");
  add_window_flags(c_word);

  CLI::App* c_graph = app.add_subcommand("graph", "export the summation graph");
  c_graph->add_option("--dot", dot_file, "output .dot file ('-' for stdout)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (k < 1 || qmax < 0 || l < 0 || i < 0 || i > l || l > k)
      throw InvalidConfig("need 1 <= k, 0 <= qmax, 0 <= i <= l <= k");
    TruncationPolicy policy{qmax, z1min, z2max};
    const int nthreads = resolve_threads(threads);

    if (*c_char) {
      CharacterVector v = compute(parse_method(method), k, policy);
      const TruncatedSeries& s = v.at(i, l);
      json doc;
      doc["k"] = k;
      doc["i"] = i;
      doc["l"] = l;
      doc["qmax"] = qmax;
      doc["method"] = method;
      doc["terms"] = terms_json(s);
      emit(format, out, doc, s);
      return 0;
    }

    if (*c_full) {
      CharacterVector v = compute(parse_method(method), k, policy);
      TruncatedSeries s = v.at(0, l).substitute_z();
      for (int ii = 1; ii <= l; ++ii) s += v.at(ii, l).substitute_z();
      json doc;
      doc["k"] = k;
      doc["l"] = l;
      doc["qmax"] = qmax;
      doc["method"] = method;
      doc["terms"] = terms_json(s);
      emit(format, out, doc, s);
      return 0;
    }

    if (*c_cmp) {
      std::vector<std::string> names;
      std::stringstream ss(methods);
      for (std::string part; std::getline(ss, part, ',');)
        if (!part.empty()) names.push_back(part);
      if (names.size() < 2)
        throw InvalidConfig("--methods needs at least two entries");

      std::vector<std::future<CharacterVector>> jobs;
      std::vector<CharacterVector> results;
      for (const std::string& name : names) {
        Method m = parse_method(name);
        auto task = [m, k, policy] { return compute(m, k, policy); };
        if (nthreads > 1 && jobs.size() + 1 < names.size())
          jobs.push_back(std::async(std::launch::async, task));
        else
          jobs.push_back(std::async(std::launch::deferred, task));
      }
      for (auto& j : jobs) results.push_back(j.get());

      bool all_equal = true;
      for (size_t j = 1; j < results.size(); ++j) {
        for (StateIndex s : all_states(k)) {
          const auto& a = results[0].at(s);
          const auto& b = results[j].at(s);
          if (a == b) {
            std::cout << "chi_{" << s.i << "," << s.l << "}: " << names[0]
                      << " == " << names[j] << "\n";
            continue;
          }
          all_equal = false;
          // Smallest differing exponent triple with both coefficients.
          TruncatedSeries diff = a - b;
          auto it = diff.terms().begin();
          const auto& key = it->first;
          std::cout << "chi_{" << s.i << "," << s.l << "}: " << names[0]
                    << " != " << names[j] << " first at q^" << key[0] << " z1^"
                    << key[1] << " z2^" << key[2] << ": "
                    << a.coeff_at(key[0], key[1], key[2]).str() << " vs "
                    << b.coeff_at(key[0], key[1], key[2]).str() << "\n";
        }
      }
      std::cout << (all_equal ? "all methods agree" : "MISMATCH") << "\n";
      return all_equal ? 0 : 1;
    }

    if (*c_ver) return run_verify(suite, qmax);

    if (*c_word) {
      OperatorWord w = parse_word(word_text);
      if (trace) {
        if (!w.single_letters())
          throw InvalidConfig("--trace needs a word of single letters");
        std::cout << "trace:";
        for (Vertex v : trace_path(w)) {
          std::cout << " (";
          for (int j = 0; j < 3; ++j)
            if (v & (1u << j)) std::cout << char('1' + j);
          std::cout << ")";
        }
        std::cout << "\n";
      }
      TruncationPolicy pol = policy;
      if (!pol.z2max) pol.z2max = 2 * qmax + 2 * k + 6;
      VectorSum state{SimpleVector::bracket(
          Monomial::one(), Monomial::zero(), Monomial::of(0, 0, 1))};
      CharacterVector ch = to_character(apply_word(w, state), k, pol);
      std::cout << w.str() << " applied to [1, 0, z2], k=" << k << ":\n";
      for (StateIndex s : all_states(k)) {
        std::cout << "chi_{" << s.i << "," << s.l << "}:\n";
        write_table(std::cout, ch.at(s));
      }
      return 0;
    }

    if (*c_graph) {
      if (dot_file == "-") {
        std::cout << export_dot();
      } else {
        std::ofstream f(dot_file);
        if (!f) throw InvalidConfig("cannot open " + dot_file);
        f << export_dot();
      }
      return 0;
    }
  } catch (const UndefinedOperator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}

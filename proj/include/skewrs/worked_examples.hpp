#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewrs/code.hpp"
#include "skewrs/cyclotomic_field.hpp"
#include "skewrs/finite_field.hpp"
#include "skewrs/matrix.hpp"
#include "skewrs/pgz_decoder.hpp"
#include "skewrs/rational_function_field.hpp"
#include "skewrs/skew_poly.hpp"

namespace skewrs {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  bool note = false;  // informational, never fails the transcript
};

struct Transcript {
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.note && !c.passed) return false;
    return !checks.empty();
  }

  std::string format() const {
    std::string out = "== " + title + "\n";
    for (const auto& c : checks) {
      if (c.note) {
        out += "[info] " + c.name + ": " + c.actual + "\n";
      } else if (c.passed) {
        out += "[ok]   " + c.name + "\n";
      } else {
        out += "[FAIL] " + c.name + "\n  expected: " + c.expected + "\n  actual:   " + c.actual + "\n";
      }
    }
    out += passed() ? "PASS" : "FAIL";
    out += " (" + std::to_string(seconds) + " s)\n";
    return out;
  }
};

namespace detail {

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

/// Records exact-equality checks, parsing expected values from their printed text.
template <SkewField F>
class Checker {
 public:
  using Element = ElementOf<F>;
  using Rows = std::vector<std::vector<std::string>>;

  Checker(const F& field, Transcript& t) : field_(field), t_(t) {}

  void flag(std::string name, bool ok, std::string expected = "true", std::string actual = "false") {
    t_.checks.push_back({std::move(name), ok, std::move(expected), ok ? "" : std::move(actual)});
  }

  void note(std::string name, std::string text) { t_.checks.push_back({std::move(name), true, "", std::move(text), true}); }

  void element(std::string name, const std::string& expected, const Element& actual) {
    guarded(name, expected, [&] { return field_.parse(expected) == actual; }, [&] { return field_.format(actual); });
  }

  void elements(std::string name, const std::vector<std::string>& expected, const std::vector<Element>& actual) {
    std::string exp_text = "[";
    for (std::size_t i = 0; i < expected.size(); ++i) exp_text += (i ? ", " : "") + expected[i];
    exp_text += "]";
    guarded(
        name, exp_text,
        [&] {
          if (expected.size() != actual.size()) return false;
          for (std::size_t i = 0; i < expected.size(); ++i)
            if (!(field_.parse(expected[i]) == actual[i])) return false;
          return true;
        },
        [&] { return format_element_list<F>(field_, actual); });
  }

  void matrix(std::string name, const Rows& expected, const std::optional<Matrix<F>>& actual) {
    std::string exp_text = "[";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      exp_text += i ? ", [" : "[";
      for (std::size_t j = 0; j < expected[i].size(); ++j) exp_text += (j ? ", " : "") + expected[i][j];
      exp_text += "]";
    }
    exp_text += "]";
    guarded(
        name, exp_text,
        [&] {
          if (!actual || actual->rows() != expected.size()) return false;
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (expected[i].size() != actual->cols()) return false;
            for (std::size_t j = 0; j < expected[i].size(); ++j)
              if (!(field_.parse(expected[i][j]) == (*actual)(i, j))) return false;
          }
          return true;
        },
        [&] { return actual ? format_matrix(*actual) : std::string("(absent)"); });
  }

  void poly(std::string name, const std::string& expected, const std::optional<SkewPoly<F>>& actual) {
    guarded(
        name, expected, [&] { return actual && parse_poly(field_, expected) == *actual; },
        [&] { return actual ? format_poly(*actual) : std::string("(absent)"); });
  }

  void indices(std::string name, const std::vector<std::size_t>& expected, const std::vector<std::size_t>& actual) {
    flag(std::move(name), expected == actual, join_indices(expected), join_indices(actual));
  }

 private:
  template <class Pred, class Show>
  void guarded(std::string& name, const std::string& expected, Pred pred, Show show) {
    bool ok = false;
    std::string actual;
    try {
      ok = pred();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    if (!ok && actual.empty()) actual = show();
    t_.checks.push_back({std::move(name), ok, expected, actual});
  }

  const F& field_;
  Transcript& t_;
};

template <class Fn>
Transcript timed(std::string title, Fn&& body) {
  Transcript t{std::move(title), {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.checks.push_back({"unexpected exception", false, "none", e.what()});
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

}  // namespace detail

/// GF(2^12), sigma = Frob^10, n = 6, delta = 5, alpha = a. Scenario 1 takes
/// the direct branch, scenario 2 the echelon branch. Received words are
/// rebuilt as c + e from the stated error.
inline Transcript worked_example_1() {
  return detail::timed("GF(2^12), sigma = Frob^10, delta = 5", [](Transcript& t) {
    const FiniteField L(GaloisField(2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}), 10);
    detail::Checker<FiniteField> ck(L, t);
    const auto a = L.generator();
    ck.flag("order of sigma is 6", L.order() == 6, "6", std::to_string(L.order()));
    ck.element("sigma(a)", "a^1024", L.sigma(a));
    ck.flag("a is normal", is_normal(L, a));
    const auto code = build_code(L, a, 0, 5);
    ck.element("beta", "a^1023", code.beta());
    std::vector<GfElem> roots;
    for (int j = 0; j < 6; ++j) roots.push_back(code.beta_root(j));
    ck.elements("beta-roots", {"a^1023", "a^3327", "a^3903", "a^4047", "a^4083", "a^4092"}, roots);
    ck.matrix("N",
              {{"1", "1", "1", "1", "1", "1"},
               {"a^1023", "a^3327", "a^3903", "a^4047", "a^4083", "a^4092"},
               {"a^255", "a^3135", "a^3855", "a^4035", "a^4080", "a^1020"},
               {"a^63", "a^3087", "a^3843", "a^4032", "a^1008", "a^252"},
               {"a^15", "a^3075", "a^3840", "a^960", "a^240", "a^60"},
               {"a^3", "a^3072", "a^768", "a^192", "a^48", "a^12"}},
              code.evaluation());
    ck.poly("g", "x^4 + a^2103 x^3 + a^687 x^2 + a^1848 x + a^759", code.generator());
    const auto c = encode(code, parse_poly(L, "x + a"));
    ck.poly("c = (x + a) g", "x^5 + a^3953 x^4 + a^1333 x^3 + a^2604 x^2 + a^1596 x + a^760", c);
    const auto printed_y = parse_poly(L, "x^5 + a^3953 x^4 + a^671 x^3 + a^2604 x^2 + a^1596 x + a^3699");
    const detail::Checker<FiniteField>::Rows value_matrix{{"a", "a^1024"}, {"a^64", "a^16"}};

    // Scenario 1.
    const auto e1 = parse_poly(L, "a^2 + a^3 x^3");
    ck.flag("scenario 1: printed y = c + e", printed_y == c + e1, format_poly(printed_y), format_poly(c + e1));
    const auto r1 = decode(code, c + e1);
    ck.matrix("scenario 1: syndrome matrix", {{"a^3170", "a^2390"}, {"a^2645", "a^428"}, {"a^107", "a^248"}},
              r1.syndrome_matrix);
    ck.matrix("scenario 1: rcef", {{"1", "0"}, {"0", "1"}, {"a^1950", "a^3315"}}, r1.syndrome_echelon);
    ck.poly("scenario 1: rho", "x^2 + a^3315 x + a^1950", r1.rho);
    ck.elements("scenario 1: rho_N", {"0", "a^210", "a^2685", "0", "a^1155", "a^3945"}, r1.rho_evaluations);
    ck.flag("scenario 1: direct branch", r1.branch == DecodeBranch::Direct, "direct",
            std::string(to_string(r1.branch)));
    ck.indices("scenario 1: positions", {0, 3}, r1.positions);
    ck.matrix("scenario 1: error-value matrix", value_matrix, error_value_matrix(code, std::span(r1.positions)));
    ck.elements("scenario 1: error-value rhs", {"a^3170", "a^2645"},
                error_value_rhs(code, std::span<const GfElem>(r1.syndromes), 2));
    ck.elements("scenario 1: values", {"a^2", "a^3"}, r1.values);
    ck.poly("scenario 1: message", "x + a", r1.message);

    // Scenario 2.
    const auto e2 = parse_poly(L, "a^2 + a^1367 x^3");
    ck.note("scenario 2: printed y",
            printed_y == c + e2 ? "matches c + e"
                                : "differs from c + e = " + format_poly(c + e2) + "; decoding c + e");
    const auto r2 = decode(code, c + e2);
    ck.matrix("scenario 2: syndrome matrix", {{"a^59", "a^65"}, {"a^1040", "a^1046"}, {"a^2309", "a^2315"}},
              r2.syndrome_matrix);
    ck.matrix("scenario 2: rcef", {{"1", "0"}, {"a^981", "0"}, {"a^2250", "0"}}, r2.syndrome_echelon);
    ck.poly("scenario 2: rho", "x + a^981", r2.rho);
    ck.elements("scenario 2: rho_N", {"a^1437", "a^1281", "a^4053", "a^9", "a^3149", "a^3853"},
                r2.rho_evaluations);
    ck.flag("scenario 2: echelon branch", r2.branch == DecodeBranch::Echelon, "echelon",
            std::string(to_string(r2.branch)));
    std::optional<Matrix<FiniteField>> m_rho, n_rho;
    if (r2.rho) {
      m_rho = multiples_matrix(*r2.rho, 6);
      n_rho = *m_rho * code.decoder_evaluation();
    }
    ck.matrix("scenario 2: M_rho",
              {{"a^981", "1", "0", "0", "0", "0"},
               {"0", "a^1269", "1", "0", "0", "0"},
               {"0", "0", "a^1341", "1", "0", "0"},
               {"0", "0", "0", "a^1359", "1", "0"},
               {"0", "0", "0", "0", "a^3411", "1"}},
              m_rho);
    ck.matrix("scenario 2: N_rho",
              {{"a^1437", "a^1281", "a^4053", "a^9", "a^3149", "a^3853"},
               {"a^2406", "a^576", "a^1845", "a^978", "a^1799", "a^1984"},
               {"a^3672", "a^3471", "a^1293", "a^2244", "a^3509", "a^493"},
               {"a^1941", "a^3171", "a^1155", "a^513", "a^1889", "a^1144"},
               {"a^2532", "a^3096", "a^3168", "a^1104", "a^1484", "a^283"}},
              n_rho);
    ck.matrix("scenario 2: H_rho",
              {{"1", "0", "0", "a^2667", "0", "0"},
               {"0", "1", "0", "0", "0", "0"},
               {"0", "0", "1", "0", "0", "0"},
               {"0", "0", "0", "0", "1", "0"},
               {"0", "0", "0", "0", "0", "1"}},
              r2.rho_echelon);
    ck.indices("scenario 2: removed rows", {0}, r2.removed_rows);
    ck.indices("scenario 2: positions", {0, 3}, r2.positions);
    ck.matrix("scenario 2: error-value matrix", value_matrix, error_value_matrix(code, std::span(r2.positions)));
    ck.elements("scenario 2: error-value rhs", {"a^59", "a^1040"},
                error_value_rhs(code, std::span<const GfElem>(r2.syndromes), 2));
    ck.elements("scenario 2: values", {"a^2", "a^1367"}, r2.values);
    ck.poly("scenario 2: message", "x + a", r2.message);
  });
}

/// F_4(z), sigma(z) = (z + a)/(z + a^2), n = 5, delta = 5, alpha = z; y = g + e.
inline Transcript worked_example_2() {
  return detail::timed("F_4(z), sigma(z) = (z + a)/(z + a^2), delta = 5", [](Transcript& t) {
    const GaloisField f4(2, 2, {1, 1, 1});
    const RationalFunctionField L(f4, {f4.one(), f4.parse("a"), f4.one(), f4.parse("a^2")});
    detail::Checker<RationalFunctionField> ck(L, t);
    ck.flag("order of sigma is 5", L.order() == 5, "5", std::to_string(L.order()));
    const auto z = L.parse("z");
    ck.flag("z is normal", is_normal(L, z));
    const auto code = build_code(L, z, 0, 5);
    ck.element("beta", "(z + a)/(z^2 + a^2 z)", code.beta());
    const std::string g_text =
        "x^4 + ((z + a)/(z^5 + a^2 z)) x^3"
        " + ((a z^5 + a^2 z^4 + a z + a^2)/(z^5 + a^2 z^4 + a^2 z + a)) x^2"
        " + ((a^2 z^5 + z^4 + z + a)/(z^4 + a^2)) x"
        " + (a z^5 + a^2 z^4)/(a^2 z^5 + a^2 z^4 + a z + a)";
    ck.poly("g", g_text, code.generator());
    const auto printed_y = parse_poly(L,
        "x^4 + (1/(z^4 + a^2)) x^3"
        " + ((a z^5 + a^2 z^4 + a z + a^2)/(z^5 + a^2 z^4 + a^2 z + a)) x^2"
        " + ((a^2 z^6 + z^5 + z^2 + a z + 1)/(z^5 + a^2 z)) x"
        " + (a z^5 + a^2 z^4)/(a^2 z^5 + a^2 z^4 + a z + a)");
    const auto e = parse_poly(L, "(a/(z^5 + a^2 z)) x^3 + (1/(z^5 + a^2 z)) x");
    ck.flag("printed y = g + e", printed_y == code.generator() + e, format_poly(printed_y),
            format_poly(code.generator() + e));
    const auto r = decode(code, printed_y);
    ck.matrix("syndrome matrix",
              {{"(a^2 z^2 + a z + a^2)/(a^2 z^7 + a^2 z^6 + a^2 z^5 + a z^3 + a z^2 + a z)",
                "(a z^7 + a^2 z^6 + a^2 z^5 + a z^4 + a z^3 + a^2 z^2 + a^2 z + a)/(z^3 + a z^2 + a z + a^2)"},
               {"(z^2 + z + a^2)/(a z^7 + a z^6 + z^3 + z^2)",
                "(a z^6 + a z^5 + z^4 + a z^2 + a z + 1)/(a z^2 + z)"},
               {"(a^2 z^2 + z + a^2)/(a z^6 + a^2 z^5 + z^2 + a z)",
                "(a z^7 + z^6 + z^5 + a z^4 + a z^3 + z^2 + z + a)/(a^2 z^2 + a^2 z + a^2)"}},
              r.syndrome_matrix);
    ck.matrix("rcef",
              {{"1", "0"},
               {"(a^2 z^4 + a z^2 + z + a)/(z^4 + a z^3 + a z^2 + z)", "0"},
               {"(a z^3 + a z^2 + 1)/(z^2 + a^2 z + 1)", "0"}},
              r.syndrome_echelon);
    const std::string rho0 = "(a^2 z^4 + a z^2 + z + a)/(z^4 + a z^3 + a z^2 + z)";
    ck.poly("rho", "x + " + rho0, r.rho);
    ck.matrix("N",
              {{"1", "1", "1", "1", "1"},
               {"(z + a)/(z^2 + a^2 z)", "(a^2 z^2 + z + a)/(a z^2 + a^2 z)", "z/(z^2 + a^2 z + a)",
                "(z^2 + z + 1)/(a^2 z + a^2)", "(z^2 + z)/(a^2 z + a)"},
               {"(a z + a)/z^2", "(a^2 z + a)/(a z^2 + 1)", "(z^2 + a^2 z)/(a^2 z^2 + a^2)", "a^2 z^2 + z",
                "(z^2 + a^2 z + a)/(a^2 z^2 + 1)"},
               {"a^2/(a z^2 + a^2 z)", "(a^2 z^2 + 1)/(z^2 + a^2 z + a)", "z^2/(a z + a)",
                "(a^2 z^2 + a)/(z + a^2)", "(a^2 z^2 + a^2)/(z^2 + a^2 z)"},
               {"(a^2 z + a)/(z^2 + z)", "(a^2 z^2 + a z)/(a^2 z + 1)", "(z^2 + a z)/(a z^2 + a^2 z + 1)",
                "(a z^2 + z + a^2)/(a z)", "(a^2 z + a^2)/(z^2 + z + 1)"}},
              code.evaluation());
    std::size_t zeros = 0;
    for (const auto& v : r.rho_evaluations) zeros += L.is_zero(v);
    ck.flag("rho_N has no zero coordinate", !r.rho_evaluations.empty() && zeros == 0, "0 zeros",
            std::to_string(zeros) + " zeros");
    ck.flag("echelon branch", r.branch == DecodeBranch::Echelon, "echelon", std::string(to_string(r.branch)));
    std::optional<Matrix<RationalFunctionField>> m_rho;
    if (r.rho) m_rho = multiples_matrix(*r.rho, 5);
    ck.matrix("M_rho",
              {{rho0, "1", "0", "0", "0"},
               {"0", "(a z^4 + z^3 + z^2 + a z)/(a^2 z^3 + a z^2 + a^2 z + a^2)", "1", "0", "0"},
               {"0", "0", "(a^2 z^3 + a z^2 + a)/(z^4 + z^2 + a^2 z + a^2)", "1", "0"},
               {"0", "0", "0", "(a^2 z^4 + a^2 z^3 + a^2 z^2 + a z + 1)/(a^2 z^3 + a^2 z^2 + z)", "1"}},
              m_rho);
    ck.matrix("H_rho",
              {{"1", "0", "0", "0", "0"},
               {"0", "1", "0", "(a z^2 + 1)/(z + a^2)", "0"},
               {"0", "0", "1", "0", "0"},
               {"0", "0", "0", "0", "1"}},
              r.rho_echelon);
    ck.indices("removed rows", {1}, r.removed_rows);
    ck.indices("positions", {1, 3}, r.positions);
    ck.matrix("error-value matrix", {{"(z + a)/(z + a^2)", "(a z + a)/z"}, {"a/(z + a)", "(a^2 z + a)/(z + 1)"}},
              error_value_matrix(code, std::span(r.positions)));
    ck.elements("error-value rhs",
                {"(a^2 z^2 + a z + a^2)/(a^2 z^7 + a^2 z^6 + a^2 z^5 + a z^3 + a z^2 + a z)",
                 "(z^2 + z + a^2)/(a z^7 + a z^6 + z^3 + z^2)"},
                error_value_rhs(code, std::span<const RationalFunction>(r.syndromes), 2));
    ck.elements("values", {"1/(z^5 + a^2 z)", "a/(z^5 + a^2 z)"}, r.values);
    ck.flag("error recovered", r.ok() && SkewPoly<RationalFunctionField>(L, r.error) == e);
    ck.poly("message", "1", r.message);
  });
}

/// Q(chi), chi^7 = 1, sigma(chi) = chi^3, n = 6, delta = 5, alpha = chi.
/// The printed generator has leading coefficient 2, so the message that
/// reproduces it against the monic generator is 2.
inline Transcript worked_example_3() {
  return detail::timed("Q(chi), sigma(chi) = chi^3, delta = 5", [](Transcript& t) {
    const CyclotomicField L(7, 3);
    detail::Checker<CyclotomicField> ck(L, t);
    const auto chi = L.generator();
    ck.flag("order of sigma is 6", L.order() == 6, "6", std::to_string(L.order()));
    ck.flag("chi is normal", is_normal(L, chi));
    const auto code = build_code(L, chi, 0, 5);
    ck.element("beta", "chi^2", code.beta());
    const auto printed_g = parse_poly(L,
        "2x^4 + (-chi^5 - chi^3 - chi^2) x^3 + (chi^3 + chi + 1) x^2 + (chi^5 + chi^4 + 1) x"
        " + chi^5 - chi^2 + chi + 1");
    ck.flag("printed g = 2 * (monic g)", printed_g == code.generator().scaled(L.from_int(2)),
            format_poly(printed_g), format_poly(code.generator().scaled(L.from_int(2))));
    const auto y = parse_poly(L,
        "2x^4 + (-chi^5 - chi^3 - chi^2) x^3 + (chi^3 + 2chi + 1) x^2 + (chi^5 + chi^4 + 1) x"
        " + chi^5 - chi^2 + chi + 1");
    const auto r = decode(code, y);
    ck.matrix("syndrome matrix", {{"chi^3", "1"}, {"1", "chi^4"}, {"chi^5", "chi^2"}}, r.syndrome_matrix);
    ck.matrix("rcef", {{"1", "0"}, {"chi^4", "0"}, {"chi^2", "0"}}, r.syndrome_echelon);
    ck.flag("mu = 1", r.mu == 1, "1", std::to_string(r.mu));
    ck.poly("rho", "x - chi^4", r.rho);
    const std::string b = "(-chi^5 - chi^4 - chi^3 - chi^2 - chi - 1)";
    ck.matrix("N",
              {{"1", "1", "1", "1", "1", "1"},
               {"chi^2", b, "chi^4", "chi^5", "chi", "chi^3"},
               {"chi", "chi^3", "chi^2", b, "chi^4", "chi^5"},
               {"chi^5", "chi", "chi^3", "chi^2", b, "chi^4"},
               {"chi^3", "chi^2", b, "chi^4", "chi^5", "chi"},
               {"chi^4", "chi^5", "chi", "chi^3", "chi^2", b}},
              code.evaluation());
    ck.elements("rho_N",
                {"-chi^4 + chi^2", "-chi^5 - 2chi^4 - chi^3 - chi^2 - chi - 1", "0", "chi^5 - chi^4",
                 "-chi^4 + chi", "-chi^4 + chi^3"},
                r.rho_evaluations);
    ck.flag("direct branch", r.branch == DecodeBranch::Direct, "direct", std::string(to_string(r.branch)));
    ck.indices("positions", {2}, r.positions);
    ck.matrix("error-value matrix", {{"chi^2"}}, error_value_matrix(code, std::span(r.positions)));
    ck.elements("error-value rhs", {"chi^3"},
                error_value_rhs(code, std::span<const CyclotomicElement>(r.syndromes), 1));
    ck.elements("values", {"chi"}, r.values);
    ck.flag("error = chi x^2", r.ok() && SkewPoly<CyclotomicField>(L, r.error) == parse_poly(L, "chi x^2"));
    ck.flag("corrected word = printed g", r.ok() && SkewPoly<CyclotomicField>(L, r.codeword) == printed_g);
    ck.poly("message", "2", r.message);
  });
}

inline Transcript worked_example(int which) {
  switch (which) {
    case 1:
      return worked_example_1();
    case 2:
      return worked_example_2();
    case 3:
      return worked_example_3();
  }
  throw std::invalid_argument("worked example must be 1, 2 or 3");
}

}  // namespace skewrs

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewrs/errors.hpp"
#include "skewrs/expression_parser.hpp"
#include "skewrs/field_concepts.hpp"
#include "skewrs/matrix.hpp"

namespace skewrs {

/// Element of the skew polynomial ring L[x; sigma], where x c = sigma(c) x.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has no coefficients and degree -1.
template <SkewField F>
class SkewPoly {
 public:
  using Element = ElementOf<F>;

  explicit SkewPoly(const F& field) : field_(&field) {}

  SkewPoly(const F& field, std::vector<Element> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
    trim();
  }

  static SkewPoly constant(const F& field, const Element& c) { return monomial(field, c, 0); }

  static SkewPoly monomial(const F& field, const Element& c, std::size_t degree) {
    std::vector<Element> coeffs(degree + 1, field.zero());
    coeffs[degree] = c;
    return SkewPoly(field, std::move(coeffs));
  }

  /// x - gamma.
  static SkewPoly linear(const F& field, const Element& gamma) {
    return SkewPoly(field, {field.neg(gamma), field.one()});
  }

  /// x^n - 1, central in L[x; sigma] when n is the order of sigma.
  static SkewPoly x_pow_minus_one(const F& field, std::size_t n) {
    std::vector<Element> coeffs(n + 1, field.zero());
    coeffs[0] = field.neg(field.one());
    coeffs[n] = field.one();
    return SkewPoly(field, std::move(coeffs));
  }

  const F& field() const { return *field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Element> coefficients() const { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  const Element& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  /// Coefficient vector padded with zeros to `length`.
  std::vector<Element> to_vector(std::size_t length) const {
    if (coeffs_.size() > length) throw std::invalid_argument("polynomial does not fit the vector length");
    std::vector<Element> out(coeffs_);
    out.resize(length, field_->zero());
    return out;
  }

  SkewPoly operator+(const SkewPoly& o) const { return combine(o, false); }
  SkewPoly operator-(const SkewPoly& o) const { return combine(o, true); }

  SkewPoly operator-() const {
    std::vector<Element> out(coeffs_);
    for (auto& c : out) c = field_->neg(c);
    return SkewPoly(*field_, std::move(out));
  }

  /// Skew product: coefficient of x^k is sum_{i+j=k} f_i sigma^i(g_j).
  SkewPoly operator*(const SkewPoly& g) const {
    check_same_field(g);
    if (is_zero() || g.is_zero()) return SkewPoly(*field_);
    const F& f = *field_;
    std::vector<Element> out(coeffs_.size() + g.coeffs_.size() - 1, f.zero());
    std::vector<Element> shifted(g.coeffs_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i > 0)
        for (auto& c : shifted) c = f.sigma(c, 1);
      if (f.is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < shifted.size(); ++j)
        out[i + j] = f.add(out[i + j], f.mul(coeffs_[i], shifted[j]));
    }
    return SkewPoly(f, std::move(out));
  }

  /// Left scalar multiple c * f.
  SkewPoly scaled(const Element& c) const {
    std::vector<Element> out(coeffs_);
    for (auto& x : out) x = field_->mul(c, x);
    return SkewPoly(*field_, std::move(out));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.coeffs_ == b.coeffs_; }

  void check_same_field(const SkewPoly& o) const {
    if (field_ != o.field_) throw std::invalid_argument("skew polynomials over different field contexts");
  }

 private:
  SkewPoly combine(const SkewPoly& o, bool subtract) const {
    check_same_field(o);
    const F& f = *field_;
    std::vector<Element> out(std::max(coeffs_.size(), o.coeffs_.size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Element a = coeff(i), b = o.coeff(i);
      out[i] = subtract ? f.sub(a, b) : f.add(a, b);
    }
    return SkewPoly(f, std::move(out));
  }

  void trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  const F* field_;
  std::vector<Element> coeffs_;
};

template <SkewField F>
struct DivMod {
  SkewPoly<F> quotient;
  SkewPoly<F> remainder;
};

/// Left division of g by f: g = q * f + r with deg r < deg f.
/// f right-divides g iff r = 0.
template <SkewField F>
DivMod<F> left_divmod(const SkewPoly<F>& g, const SkewPoly<F>& f) {
  g.check_same_field(f);
  if (f.is_zero()) throw ArithmeticError("skew polynomial division by zero");
  const F& field = f.field();
  const int df = f.degree();
  std::vector<ElementOf<F>> rem(g.coefficients().begin(), g.coefficients().end());
  if (static_cast<int>(rem.size()) - 1 < df) return {SkewPoly<F>(field), g};
  std::vector<ElementOf<F>> quot(rem.size() - df, field.zero());
  const auto lead = f.leading();
  for (int k = static_cast<int>(rem.size()) - 1 - df; k >= 0; --k) {
    const auto& top = rem[k + df];
    if (field.is_zero(top)) continue;
    // (c x^k) f has leading coefficient c sigma^k(lead).
    const auto c = field.div(top, field.sigma(lead, k));
    quot[k] = c;
    for (int j = 0; j <= df; ++j)
      rem[k + j] = field.sub(rem[k + j], field.mul(c, field.sigma(f.coeff(j), k)));
  }
  rem.resize(df);
  return {SkewPoly<F>(field, std::move(quot)), SkewPoly<F>(field, std::move(rem))};
}

/// N_i(gamma) = gamma sigma(gamma) ... sigma^(i-1)(gamma); N_0 = 1.
template <SkewField F>
ElementOf<F> norm(const F& field, std::size_t i, const ElementOf<F>& gamma) {
  auto result = field.one();
  auto conj = gamma;
  for (std::size_t k = 0; k < i; ++k) {
    result = field.mul(result, conj);
    conj = field.sigma(conj, 1);
  }
  return result;
}

/// Norms N_0(gamma), ..., N_{count-1}(gamma) by the recurrence.
template <SkewField F>
std::vector<ElementOf<F>> norms(const F& field, std::size_t count, const ElementOf<F>& gamma) {
  std::vector<ElementOf<F>> out;
  out.reserve(count);
  auto result = field.one();
  auto conj = gamma;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(result);
    result = field.mul(result, conj);
    conj = field.sigma(conj, 1);
  }
  return out;
}

/// Right evaluation: the remainder of the left division of f by x - gamma,
/// computed as sum_i f_i N_i(gamma).
template <SkewField F>
ElementOf<F> right_eval(const SkewPoly<F>& f, const ElementOf<F>& gamma) {
  const F& field = f.field();
  const auto ns = norms(field, f.coefficients().size(), gamma);
  auto acc = field.zero();
  for (std::size_t i = 0; i < ns.size(); ++i) acc = field.add(acc, field.mul(f.coeff(i), ns[i]));
  return acc;
}

template <SkewField F>
SkewPoly<F> make_monic(const SkewPoly<F>& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return f.scaled(f.field().inv(f.leading()));
}

/// Greatest common right divisor, monic.
template <SkewField F>
SkewPoly<F> gcrd(SkewPoly<F> f, SkewPoly<F> g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcrd of two zero polynomials");
  while (!g.is_zero()) {
    auto r = left_divmod(f, g).remainder;
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(f);
}

/// Least common left multiple, monic, via the extended right Euclidean algorithm.
template <SkewField F>
SkewPoly<F> lclm(const SkewPoly<F>& f, const SkewPoly<F>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("lclm needs nonzero polynomials");
  const F& field = f.field();
  // Invariant: r_i = u_i f + v_i g.
  SkewPoly<F> r0 = f, r1 = g;
  SkewPoly<F> u0 = SkewPoly<F>::constant(field, field.one()), u1(field);
  while (!r1.is_zero()) {
    auto [q, r] = left_divmod(r0, r1);
    SkewPoly<F> u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // u1 f + v1 g = 0 with u1 of minimal degree, so u1 f is the lclm.
  return make_monic(u1 * f);
}

/// lclm of a nonempty list, folded left to right.
template <SkewField F>
SkewPoly<F> lclm(std::span<const SkewPoly<F>> polys) {
  if (polys.empty()) throw std::invalid_argument("lclm of an empty list");
  SkewPoly<F> acc = make_monic(polys.front());
  for (std::size_t i = 1; i < polys.size(); ++i) acc = lclm(acc, polys[i]);
  return acc;
}

/// Rows are the coefficient vectors of f, x f, ..., x^(n-m-1) f, m = deg f.
template <SkewField F>
Matrix<F> multiples_matrix(const SkewPoly<F>& f, std::size_t n) {
  const F& field = f.field();
  const std::size_t m = static_cast<std::size_t>(f.degree());
  if (f.is_zero() || m > n) throw std::invalid_argument("multiples_matrix needs 0 <= deg f <= n");
  Matrix<F> out(field, n - m, n);
  for (std::size_t i = 0; i < n - m; ++i)
    for (std::size_t j = 0; j <= m; ++j) out(i, i + j) = field.sigma(f.coeff(j), static_cast<long long>(i));
  return out;
}

/// If f = lclm(x - sigma^k(beta) : k in K) for some index set K, returns K
/// (sorted). `evaluation` is the n x n matrix whose column k holds the norms
/// of sigma^k(beta). Returns nullopt when f does not fully decompose.
template <SkewField F>
std::optional<std::vector<std::size_t>> full_beta_decomposition_test(const SkewPoly<F>& f,
                                                                     const Matrix<F>& evaluation) {
  const F& field = f.field();
  const std::size_t n = evaluation.rows();
  if (f.is_zero() || f.degree() < 1 || static_cast<std::size_t>(f.degree()) > n)
    throw std::invalid_argument("full_beta_decomposition_test needs 1 <= deg f <= n");
  if (!left_divmod(SkewPoly<F>::x_pow_minus_one(field, n), f).remainder.is_zero())
    throw std::invalid_argument("polynomial does not right-divide x^n - 1");
  const auto h = rref(multiples_matrix(f, n) * evaluation);
  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const long idx = canonical_index(field, h.row(i));
    if (idx < 0) return std::nullopt;
    covered[idx] = true;
  }
  std::vector<std::size_t> roots;
  for (std::size_t j = 0; j < n; ++j)
    if (!covered[j]) roots.push_back(j);
  return roots;
}

/// Text form `c_k*x^k + ... + c_0`; non-atomic coefficients are parenthesised.
template <SkewField F>
std::string format_poly(const SkewPoly<F>& f, std::string_view var = "x") {
  if (f.is_zero()) return "0";
  const F& field = f.field();
  std::string out;
  for (std::size_t i = f.coefficients().size(); i-- > 0;) {
    const auto& c = f.coefficients()[i];
    if (field.is_zero(c)) continue;
    const std::string cs = field.format(c);
    std::string term;
    bool negative = false;
    if (i == 0) {
      term = cs;
      if (!out.empty() && cs.size() > 1 && cs[0] == '-') {
        negative = true;
        term = cs.substr(1);
        // "-u - v" cannot be negated by stripping one sign.
        if (term.find_first_of("+-") != std::string::npos) {
          negative = false;
          term = cs;
        }
      }
    } else {
      const std::string mono = i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i);
      if (c == field.one()) {
        term = mono;
      } else if (is_atomic_text(cs)) {
        term = cs + "*" + mono;
      } else if (cs.size() > 1 && cs[0] == '-' && is_atomic_text(cs.substr(1))) {
        negative = true;
        term = cs.substr(1) + "*" + mono;
      } else {
        term = "(" + cs + ")*" + mono;
      }
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

template <SkewField F>
SkewPoly<F> parse_poly(const F& field, std::string_view text, std::string_view var = "x") {
  const auto terms = ExpressionParser<F>(field, text, var).parse_polynomial();
  if (terms.empty()) return SkewPoly<F>(field);
  const long long top = terms.rbegin()->first;
  std::vector<ElementOf<F>> coeffs(static_cast<std::size_t>(top) + 1, field.zero());
  for (const auto& [deg, c] : terms) coeffs[static_cast<std::size_t>(deg)] = c;
  return SkewPoly<F>(field, std::move(coeffs));
}

}  // namespace skewrs

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrs/field_concepts.hpp"
#include "skewrs/matrix.hpp"
#include "skewrs/skew_poly.hpp"

namespace skewrs {

/// n x n matrix with entry (i, j) = sigma^(i+j)(alpha).
template <SkewField F>
Matrix<F> conjugate_matrix(const F& field, const ElementOf<F>& alpha) {
  const std::size_t n = static_cast<std::size_t>(field.order());
  std::vector<ElementOf<F>> conj;
  conj.reserve(2 * n);
  auto cur = alpha;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    conj.push_back(cur);
    cur = field.sigma(cur, 1);
  }
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = conj[i + j];
  return m;
}

/// True iff alpha, sigma(alpha), ..., sigma^(n-1)(alpha) is a basis of L
/// over the fixed field, i.e. the conjugate matrix is nonsingular.
template <SkewField F>
bool is_normal(const F& field, const ElementOf<F>& alpha) {
  if (field.is_zero(alpha)) return false;
  return rank(conjugate_matrix(field, alpha)) == static_cast<std::size_t>(field.order());
}

struct NormalSearchOptions {
  std::uint64_t seed = 0x5eed;
  int max_trials = 64;
};

/// Tries the field generator first, then seeded random elements.
template <SkewField F>
ElementOf<F> find_normal_element(const F& field, const NormalSearchOptions& opts = {}) {
  const auto gen = field.generator();
  if (is_normal(field, gen)) return gen;
  Rng rng(opts.seed);
  for (int trial = 0; trial < opts.max_trials; ++trial) {
    const auto candidate = field.random_nonzero(rng);
    if (is_normal(field, candidate)) return candidate;
  }
  throw std::runtime_error("no normal element found within " + std::to_string(opts.max_trials) +
                           " trials; check that sigma has the stated order");
}

/// n x n matrix whose column j holds N_0(sigma^j(beta)), ..., N_{n-1}(sigma^j(beta)).
template <SkewField F>
Matrix<F> evaluation_matrix(const F& field, const ElementOf<F>& beta) {
  const std::size_t n = static_cast<std::size_t>(field.order());
  Matrix<F> m(field, n, n);
  auto root = beta;
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = norms(field, n, root);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    root = field.sigma(root, 1);
  }
  return m;
}

/// Skew Reed-Solomon code of length n = order(sigma) and designed distance
/// delta, generated by lclm(x - sigma^r(beta), ..., x - sigma^(r+delta-2)(beta)),
/// beta = alpha^-1 sigma(alpha).
///
/// Immutable once built. Keeps the field by reference.
template <SkewField F>
class SkewRSCode {
 public:
  using Element = ElementOf<F>;

  const F& field() const { return *field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return n_ - delta_ + 1; }
  std::size_t designed_distance() const { return delta_; }
  std::size_t correction_capability() const { return (delta_ - 1) / 2; }
  std::size_t offset() const { return r_; }
  const Element& alpha() const { return alpha_; }
  const Element& beta() const { return beta_; }
  const SkewPoly<F>& generator() const { return generator_; }

  /// Column j holds the norms of sigma^j(beta).
  const Matrix<F>& evaluation() const { return evaluation_; }

  /// sigma^j(beta).
  Element beta_root(long long j) const { return field_->sigma(beta_, j); }

  /// sigma^r(alpha): the normal element that makes this a narrow-sense code.
  const Element& decoder_alpha() const { return decoder_alpha_; }

  /// sigma^k(decoder_alpha()) for 0 <= k < 2n.
  const Element& decoder_conjugate(std::size_t k) const { return decoder_conjugates_[k % (2 * n_)]; }

  /// Evaluation matrix for the narrow-sense view: columns rotated by r.
  const Matrix<F>& decoder_evaluation() const { return decoder_evaluation_; }

  template <SkewField G>
  friend SkewRSCode<G> build_code(const G&, const ElementOf<G>&, std::size_t, std::size_t);

 private:
  SkewRSCode(const F& field, Element alpha, std::size_t r, std::size_t delta)
      : field_(&field),
        n_(static_cast<std::size_t>(field.order())),
        r_(r),
        delta_(delta),
        alpha_(std::move(alpha)),
        beta_(field.div(field.sigma(alpha_, 1), alpha_)),
        generator_(field),
        evaluation_(field, 0, 0),
        decoder_alpha_(field.sigma(alpha_, static_cast<long long>(r))),
        decoder_evaluation_(field, 0, 0) {}

  const F* field_;
  std::size_t n_;
  std::size_t r_;
  std::size_t delta_;
  Element alpha_;
  Element beta_;
  SkewPoly<F> generator_;
  Matrix<F> evaluation_;
  Element decoder_alpha_;
  std::vector<Element> decoder_conjugates_;
  Matrix<F> decoder_evaluation_;
};

template <SkewField F>
SkewRSCode<F> build_code(const F& field, const ElementOf<F>& alpha, std::size_t r, std::size_t delta) {
  const std::size_t n = static_cast<std::size_t>(field.order());
  if (delta < 2 || delta > n)
    throw std::invalid_argument("designed distance must satisfy 2 <= delta <= n (n = " +
                                std::to_string(n) + ")");
  if (!is_normal(field, alpha)) throw std::invalid_argument("alpha is not a normal element");
  SkewRSCode<F> code(field, alpha, r, delta);
  std::vector<SkewPoly<F>> factors;
  for (std::size_t i = 0; i + 1 < delta; ++i)
    factors.push_back(SkewPoly<F>::linear(field, code.beta_root(static_cast<long long>(r + i))));
  code.generator_ = lclm<F>(factors);
  code.evaluation_ = evaluation_matrix(field, code.beta_);
  code.decoder_evaluation_ = Matrix<F>(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) code.decoder_evaluation_(i, j) = code.evaluation_(i, (j + r) % n);
  auto cur = code.decoder_alpha_;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    code.decoder_conjugates_.push_back(cur);
    cur = field.sigma(cur, 1);
  }
  return code;
}

/// c = m g, for deg m <= n - delta.
template <SkewField F>
SkewPoly<F> encode(const SkewRSCode<F>& code, const SkewPoly<F>& message) {
  if (message.degree() >= static_cast<int>(code.dimension()))
    throw std::invalid_argument("message has more than n - delta + 1 coefficients");
  return message * code.generator();
}

template <SkewField F>
std::size_t hamming_weight(const F& field, std::span<const ElementOf<F>> v) {
  std::size_t w = 0;
  for (const auto& x : v)
    if (!field.is_zero(x)) ++w;
  return w;
}

/// Coefficient vectors of x^i g for 0 <= i < k: an L-basis of the code.
template <SkewField F>
std::vector<std::vector<ElementOf<F>>> code_basis(const SkewRSCode<F>& code) {
  std::vector<std::vector<ElementOf<F>>> rows;
  const F& field = code.field();
  for (std::size_t i = 0; i < code.dimension(); ++i)
    rows.push_back((SkewPoly<F>::monomial(field, field.one(), i) * code.generator()).to_vector(code.length()));
  return rows;
}

/// Every codeword, indexed by message in mixed radix q (finite fields only).
template <EnumerableField F>
std::vector<std::vector<ElementOf<F>>> enumerate_codewords(const SkewRSCode<F>& code,
                                                           std::uint64_t budget) {
  const F& field = code.field();
  const std::uint64_t q = field.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    if (total > budget / q) throw std::length_error("codeword enumeration exceeds the budget");
    total *= q;
  }
  const auto basis = code_basis(code);
  std::vector<std::vector<ElementOf<F>>> words;
  words.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<ElementOf<F>> word(code.length(), field.zero());
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < basis.size(); ++i, rest /= q) {
      const auto coef = field.element_at(rest % q);
      if (field.is_zero(coef)) continue;
      for (std::size_t j = 0; j < word.size(); ++j)
        word[j] = field.add(word[j], field.mul(coef, basis[i][j]));
    }
    words.push_back(std::move(word));
  }
  return words;
}

/// Exhaustive minimum Hamming weight over all nonzero codewords.
template <EnumerableField F>
std::size_t min_distance_oracle(const SkewRSCode<F>& code, std::uint64_t budget = 1u << 22) {
  const auto words = enumerate_codewords(code, budget);
  std::size_t best = code.length() + 1;
  for (std::size_t i = 1; i < words.size(); ++i)
    best = std::min(best, hamming_weight<F>(code.field(), words[i]));
  return best;
}

}  // namespace skewrs

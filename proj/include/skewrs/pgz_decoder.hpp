#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewrs/code.hpp"
#include "skewrs/field_concepts.hpp"
#include "skewrs/matrix.hpp"
#include "skewrs/skew_poly.hpp"

namespace skewrs {

enum class DecodeBranch { AllZero, Direct, Echelon };

inline std::string_view to_string(DecodeBranch b) {
  switch (b) {
    case DecodeBranch::AllZero:
      return "all-zero";
    case DecodeBranch::Direct:
      return "direct";
    case DecodeBranch::Echelon:
      return "echelon";
  }
  return "unknown";
}

/// Everything the decoder computed for one received word. On failure,
/// `failure` holds the reason and codeword/message are empty.
template <SkewField F>
struct DecodeReport {
  using Element = ElementOf<F>;

  std::vector<Element> syndromes;
  std::optional<Matrix<F>> syndrome_matrix;
  std::optional<Matrix<F>> syndrome_echelon;  // rcef of the syndrome matrix
  std::size_t mu = 0;
  std::optional<SkewPoly<F>> rho;
  std::vector<Element> rho_evaluations;       // rho_N
  std::optional<Matrix<F>> rho_echelon;       // H_rho, echelon branch only
  std::vector<std::size_t> removed_rows;      // non-canonical rows of H_rho
  DecodeBranch branch = DecodeBranch::AllZero;
  std::vector<std::size_t> positions;
  std::vector<Element> values;
  std::vector<Element> error;
  std::vector<Element> codeword;
  std::optional<SkewPoly<F>> message;
  std::optional<std::string> failure;

  bool ok() const { return !failure.has_value(); }
};

/// s_i = sum_j y_j N_j(sigma^i(beta')) for 0 <= i < 2t, beta' the narrow-sense root.
template <SkewField F>
std::vector<ElementOf<F>> syndromes(const SkewRSCode<F>& code, std::span<const ElementOf<F>> y) {
  if (y.size() != code.length())
    throw std::invalid_argument("received word has length " + std::to_string(y.size()) +
                                ", expected " + std::to_string(code.length()));
  const F& field = code.field();
  const auto& n_mat = code.decoder_evaluation();
  const std::size_t count = 2 * code.correction_capability();
  std::vector<ElementOf<F>> s(count, field.zero());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (field.is_zero(y[j])) continue;
    for (std::size_t i = 0; i < count; ++i) s[i] = field.add(s[i], field.mul(y[j], n_mat(j, i)));
  }
  return s;
}

/// (t+1) x t matrix with entry (i, j) = sigma^-j(s_{i+j}) sigma^i(alpha').
template <SkewField F>
Matrix<F> build_syndrome_matrix(const SkewRSCode<F>& code, std::span<const ElementOf<F>> s) {
  const F& field = code.field();
  const std::size_t t = s.size() / 2;
  Matrix<F> m(field, t + 1, t);
  for (std::size_t i = 0; i <= t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      m(i, j) = field.mul(field.sigma(s[i + j], -static_cast<long long>(j)), code.decoder_conjugate(i));
  return m;
}

template <SkewField F>
struct RhoExtraction {
  std::size_t mu;
  SkewPoly<F> rho;
  Matrix<F> echelon;
};

/// Reads mu and rho from rcef(S^t) = [I_mu ; a_0 .. a_{mu-1} ; H' | 0]:
/// rho = x^mu - sum a_i x^i. Returns nullopt when the echelon form does not
/// have that shape, which only happens beyond the correction capability.
template <SkewField F>
std::optional<RhoExtraction<F>> extract_rho(const Matrix<F>& syndrome_matrix) {
  const F& field = syndrome_matrix.field();
  Matrix<F> e = rcef(syndrome_matrix);
  std::size_t mu = 0;
  while (mu < e.cols()) {
    bool nonzero = false;
    for (std::size_t i = 0; i < e.rows() && !nonzero; ++i) nonzero = !field.is_zero(e(i, mu));
    if (!nonzero) break;
    ++mu;
  }
  if (mu == 0 || mu >= e.rows()) return std::nullopt;
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      if (!(e(i, j) == (i == j ? field.one() : field.zero()))) return std::nullopt;
  std::vector<ElementOf<F>> coeffs(mu + 1, field.zero());
  for (std::size_t i = 0; i < mu; ++i) coeffs[i] = field.neg(e(mu, i));
  coeffs[mu] = field.one();
  return RhoExtraction<F>{mu, SkewPoly<F>(field, std::move(coeffs)), std::move(e)};
}

template <SkewField F>
struct PositionSearch {
  std::vector<std::size_t> positions;
  DecodeBranch branch = DecodeBranch::Direct;
  std::vector<ElementOf<F>> rho_evaluations;
  std::optional<Matrix<F>> rho_echelon;
  std::vector<std::size_t> removed_rows;
};

/// Error positions from rho. If rho_N has exactly mu zeros, rho is the error
/// locator (direct branch). Otherwise take H_rho = rref(M_rho N), drop every
/// row that is not a canonical vector, and report the zero columns of what is
/// left (echelon branch).
template <SkewField F>
PositionSearch<F> locate_positions(const SkewRSCode<F>& code, std::size_t mu, const SkewPoly<F>& rho) {
  const F& field = code.field();
  const std::size_t n = code.length();
  const auto& n_mat = code.decoder_evaluation();
  PositionSearch<F> out;
  const auto rho_vec = rho.to_vector(n);
  out.rho_evaluations = row_times<F>(rho_vec, n_mat);
  for (std::size_t j = 0; j < n; ++j)
    if (field.is_zero(out.rho_evaluations[j])) out.positions.push_back(j);
  if (out.positions.size() == mu) {
    out.branch = DecodeBranch::Direct;
    return out;
  }
  out.branch = DecodeBranch::Echelon;
  out.positions.clear();
  const auto h = rref(multiples_matrix(rho, n) * n_mat);
  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const long idx = canonical_index(field, h.row(i));
    if (idx < 0)
      out.removed_rows.push_back(i);
    else
      covered[idx] = true;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!covered[j]) out.positions.push_back(j);
  out.rho_echelon = h;
  return out;
}

/// Row j is (sigma^{k_j}(alpha'), ..., sigma^{k_j + nu - 1}(alpha')).
template <SkewField F>
Matrix<F> error_value_matrix(const SkewRSCode<F>& code, std::span<const std::size_t> positions) {
  const std::size_t nu = positions.size();
  Matrix<F> m(code.field(), nu, nu);
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t l = 0; l < nu; ++l) m(j, l) = code.decoder_conjugate(positions[j] + l);
  return m;
}

/// (alpha' s_0, sigma(alpha') s_1, ..., sigma^{nu-1}(alpha') s_{nu-1}).
template <SkewField F>
std::vector<ElementOf<F>> error_value_rhs(const SkewRSCode<F>& code, std::span<const ElementOf<F>> s,
                                          std::size_t nu) {
  if (nu > s.size()) throw std::invalid_argument("more error positions than syndromes");
  std::vector<ElementOf<F>> rhs;
  for (std::size_t l = 0; l < nu; ++l) rhs.push_back(code.field().mul(code.decoder_conjugate(l), s[l]));
  return rhs;
}

/// Solves X M = rhs for the error values at the given positions.
template <SkewField F>
std::vector<ElementOf<F>> error_values(const SkewRSCode<F>& code, std::span<const std::size_t> positions,
                                       std::span<const ElementOf<F>> s) {
  const auto rhs = error_value_rhs(code, s, positions.size());
  return solve_row_system<F>(error_value_matrix(code, positions), rhs);
}

template <SkewField F>
DecodeReport<F> decode(const SkewRSCode<F>& code, std::span<const ElementOf<F>> y) {
  const F& field = code.field();
  const std::size_t n = code.length();
  const std::size_t t = code.correction_capability();
  DecodeReport<F> report;
  report.syndromes = syndromes(code, y);
  report.error.assign(n, field.zero());

  const auto fail = [&report](std::string reason) {
    report.failure = std::move(reason);
    report.codeword.clear();
    report.message.reset();
    return report;
  };

  bool all_zero = true;
  for (const auto& s : report.syndromes) all_zero = all_zero && field.is_zero(s);

  if (!all_zero) {
    report.syndrome_matrix = build_syndrome_matrix<F>(code, report.syndromes);
    auto extraction = extract_rho(*report.syndrome_matrix);
    if (!extraction) {
      report.syndrome_echelon = rcef(*report.syndrome_matrix);
      return fail("syndrome matrix has no error-locator echelon shape");
    }
    report.syndrome_echelon = extraction->echelon;
    report.mu = extraction->mu;
    report.rho = extraction->rho;
    auto search = locate_positions(code, extraction->mu, extraction->rho);
    report.branch = search.branch;
    report.rho_evaluations = std::move(search.rho_evaluations);
    report.rho_echelon = std::move(search.rho_echelon);
    report.removed_rows = std::move(search.removed_rows);
    report.positions = std::move(search.positions);
    if (report.positions.empty()) return fail("no error positions found");
    if (report.positions.size() > t)
      return fail("error weight " + std::to_string(report.positions.size()) +
                  " exceeds the correction capability " + std::to_string(t));
    try {
      report.values = error_values<F>(code, report.positions, report.syndromes);
    } catch (const ArithmeticError&) {
      return fail("error-value system is singular");
    }
    for (std::size_t i = 0; i < report.positions.size(); ++i)
      report.error[report.positions[i]] = report.values[i];
  }

  report.codeword.resize(n);
  for (std::size_t j = 0; j < n; ++j) report.codeword[j] = field.sub(y[j], report.error[j]);
  for (const auto& s : syndromes<F>(code, report.codeword))
    if (!field.is_zero(s)) return fail("corrected word has nonzero syndromes");
  auto [quotient, remainder] = left_divmod(SkewPoly<F>(field, report.codeword), code.generator());
  if (!remainder.is_zero()) return fail("corrected word is not a multiple of the generator");
  report.message = std::move(quotient);
  return report;
}

template <SkewField F>
DecodeReport<F> decode(const SkewRSCode<F>& code, const SkewPoly<F>& received) {
  const auto y = received.to_vector(code.length());
  return decode<F>(code, std::span<const ElementOf<F>>(y));
}

template <SkewField F>
std::string format_element_list(const F& field, std::span<const ElementOf<F>> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += field.format(v[i]);
  }
  return out + "]";
}

/// key = value text form of a report, one field per line.
template <SkewField F>
std::string format_report(const DecodeReport<F>& r, const F& field, std::string_view var = "x") {
  std::string out;
  const auto line = [&out](std::string_view key, const std::string& value) {
    out += std::string(key) + " = " + value + "\n";
  };
  line("status", r.ok() ? "ok" : "failure");
  if (r.failure) line("failure", *r.failure);
  line("branch", std::string(to_string(r.branch)));
  line("syndromes", format_element_list<F>(field, r.syndromes));
  line("mu", std::to_string(r.mu));
  if (r.rho) line("rho", format_poly(*r.rho, var));
  if (!r.rho_evaluations.empty()) line("rho_evaluations", format_element_list<F>(field, r.rho_evaluations));
  if (!r.removed_rows.empty()) {
    std::string rows;
    for (auto i : r.removed_rows) rows += (rows.empty() ? "" : ", ") + std::to_string(i);
    line("removed_rows", "[" + rows + "]");
  }
  std::string pos;
  for (auto p : r.positions) pos += (pos.empty() ? "" : ", ") + std::to_string(p);
  line("positions", "[" + pos + "]");
  line("values", format_element_list<F>(field, r.values));
  if (r.ok()) {
    line("error", format_poly(SkewPoly<F>(field, r.error), var));
    line("codeword", format_poly(SkewPoly<F>(field, r.codeword), var));
    if (r.message) line("message", format_poly(*r.message, var));
  }
  return out;
}

}  // namespace skewrs

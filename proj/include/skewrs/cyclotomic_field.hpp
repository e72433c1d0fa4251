#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewrs/field_concepts.hpp"
#include "skewrs/galois_field.hpp"

namespace skewrs {

/// Element of Q(chi): coefficients of 1, chi, ..., chi^(m-2). Stored with m
/// slots; the chi^(m-1) slot is kept zero so representation is canonical.
struct CyclotomicElement {
  std::vector<mpq_class> coeffs;

  friend bool operator==(const CyclotomicElement& x, const CyclotomicElement& y) {
    return x.coeffs == y.coeffs;
  }
};

/// The cyclotomic field Q(chi), chi a primitive m-th root of unity (m prime),
/// with sigma(chi) = chi^k for k coprime to m.
class CyclotomicField {
 public:
  using Element = CyclotomicElement;

  CyclotomicField(std::uint32_t root_order, std::uint32_t sigma_exponent, std::string symbol = "chi")
      : m_(root_order), symbol_(std::move(symbol)) {
    if (m_ < 3 || !detail::is_prime(m_))
      throw std::invalid_argument("cyclotomic order must be an odd prime");
    k_ = sigma_exponent % m_;
    if (k_ == 0) throw std::invalid_argument("sigma exponent must be coprime to the root order");
    order_ = 1;
    for (std::uint64_t e = k_; e != 1; e = e * k_ % m_) ++order_;
    exponent_powers_.resize(order_);
    std::uint64_t e = 1;
    for (int j = 0; j < order_; ++j, e = e * k_ % m_) exponent_powers_[j] = static_cast<std::uint32_t>(e);
  }

  std::uint32_t root_order() const { return m_; }
  std::uint32_t sigma_exponent() const { return k_; }
  const std::string& symbol() const { return symbol_; }

  FieldKind kind() const { return FieldKind::Cyclotomic; }
  int order() const { return order_; }
  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return Element{std::vector<mpq_class>(m_)}; }
  Element one() const { return from_int(1); }
  Element from_int(long long n) const { return from_rational(mpq_class(static_cast<long>(n))); }
  Element from_rational(const mpq_class& r) const {
    Element x = zero();
    x.coeffs[0] = r;
    return x;
  }
  /// chi^i for any integer i.
  Element root_power(long long i) const {
    Element x = zero();
    x.coeffs[floor_mod(i, m_)] = 1;
    normalize(x);
    return x;
  }
  Element generator() const { return root_power(1); }

  bool is_zero(const Element& x) const {
    for (const auto& c : x.coeffs)
      if (sgn(c) != 0) return false;
    return true;
  }

  Element add(const Element& x, const Element& y) const {
    Element out = x;
    for (std::uint32_t i = 0; i + 1 < m_; ++i) out.coeffs[i] += y.coeffs[i];
    return out;
  }

  Element sub(const Element& x, const Element& y) const {
    Element out = x;
    for (std::uint32_t i = 0; i + 1 < m_; ++i) out.coeffs[i] -= y.coeffs[i];
    return out;
  }

  Element neg(const Element& x) const {
    Element out = x;
    for (auto& c : out.coeffs) c = -c;
    return out;
  }

  Element mul(const Element& x, const Element& y) const {
    Element out = zero();
    mpq_class tmp;
    for (std::uint32_t i = 0; i + 1 < m_; ++i) {
      if (sgn(x.coeffs[i]) == 0) continue;
      for (std::uint32_t j = 0; j + 1 < m_; ++j) {
        if (sgn(y.coeffs[j]) == 0) continue;
        tmp = x.coeffs[i] * y.coeffs[j];
        out.coeffs[(i + j) % m_] += tmp;
      }
    }
    normalize(out);
    return out;
  }

  /// x^-1 = (product of the other Galois conjugates of x) / norm(x).
  Element inv(const Element& x) const {
    if (is_zero(x)) throw ArithmeticError("inverse of zero");
    Element others = one();
    for (std::uint32_t g = 2; g < m_; ++g) others = mul(others, galois_conjugate(x, g));
    const Element norm = mul(x, others);
    const mpq_class scale = 1 / norm.coeffs[0];
    for (auto& c : others.coeffs) c *= scale;
    return others;
  }

  Element div(const Element& x, const Element& y) const { return mul(x, inv(y)); }
  Element pow(const Element& x, long long k) const { return generic_pow(*this, x, k); }

  /// The automorphism chi -> chi^g of Q(chi).
  Element galois_conjugate(const Element& x, std::uint32_t g) const {
    Element out = zero();
    for (std::uint32_t i = 0; i + 1 < m_; ++i)
      out.coeffs[(static_cast<std::uint64_t>(i) * g) % m_] = x.coeffs[i];
    normalize(out);
    return out;
  }

  Element sigma(const Element& x, long long k = 1) const {
    const long long j = floor_mod(k, order_);
    if (j == 0) return x;
    return galois_conjugate(x, exponent_powers_[j]);
  }

  std::optional<Element> resolve_symbol(std::string_view name) const {
    if (name == symbol_) return generator();
    return std::nullopt;
  }

  Element parse(std::string_view text) const { return parse_element(*this, text); }

  std::string format(const Element& x) const {
    std::string out;
    for (std::uint32_t i = m_ - 1; i-- > 0;) {
      const mpq_class& c = x.coeffs[i];
      if (sgn(c) == 0) continue;
      const bool negative = sgn(c) < 0;
      const mpq_class mag = abs(c);
      const std::string mono = i == 0 ? "" : (i == 1 ? symbol_ : symbol_ + "^" + std::to_string(i));
      std::string term;
      if (mono.empty())
        term = mag.get_str();
      else if (mag == 1)
        term = mono;
      else
        term = mag.get_str() + "*" + mono;
      if (out.empty())
        out = negative ? "-" + term : term;
      else
        out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

  /// Integer coordinates drawn from [-height, height].
  Element random(Rng& rng, int height) const {
    std::uniform_int_distribution<long> dist(-height, height);
    Element x = zero();
    for (std::uint32_t i = 0; i + 1 < m_; ++i) x.coeffs[i] = dist(rng);
    return x;
  }
  Element random(Rng& rng) const { return random(rng, 3); }

  Element random_nonzero(Rng& rng) const {
    Element x;
    do x = random(rng);
    while (is_zero(x));
    return x;
  }

  std::string describe() const {
    return "Q(" + symbol_ + "), " + symbol_ + " a primitive " + std::to_string(m_) +
           "-th root of unity, sigma(" + symbol_ + ") = " + symbol_ + "^" + std::to_string(k_) +
           " (order " + std::to_string(order_) + ")";
  }

 private:
  // 1 + chi + ... + chi^(m-1) = 0 folds the top slot into the others.
  void normalize(Element& x) const {
    const mpq_class top = x.coeffs[m_ - 1];
    if (sgn(top) == 0) return;
    for (auto& c : x.coeffs) c -= top;
  }

  std::uint32_t m_;
  std::uint32_t k_ = 1;
  std::string symbol_;
  int order_ = 1;
  std::vector<std::uint32_t> exponent_powers_;
};

}  // namespace skewrs

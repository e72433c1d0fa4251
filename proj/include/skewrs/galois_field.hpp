#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewrs/errors.hpp"
#include "skewrs/expression_parser.hpp"
#include "skewrs/field_concepts.hpp"

namespace skewrs {

/// Element of GF(p^d). `value` holds the base-p digits of the polynomial
/// representative: digit i is the coefficient of a^i.
struct GfElem {
  std::uint32_t value = 0;

  friend bool operator==(GfElem, GfElem) = default;
  friend auto operator<=>(GfElem, GfElem) = default;
};

namespace detail {

// Polynomials over the prime field F_p, lowest degree first.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline PrimePoly prime_poly_mod(PrimePoly f, const PrimePoly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = static_cast<std::uint32_t>(pow_mod(m.back(), p - 2, p));
  trim(f);
  while (f.size() > dm) {
    const std::size_t shift = f.size() - 1 - dm;
    const std::uint64_t c = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - c) * m[i]) % p);
    trim(f);
  }
  return f;
}

inline PrimePoly prime_poly_mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(out);
  return out;
}

inline PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = prime_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: m is irreducible iff gcd(x^(p^i) - x, m) = 1 for 1 <= i <= deg(m)/2.
inline bool is_irreducible(const PrimePoly& m, std::uint32_t p) {
  const std::size_t d = m.size() - 1;
  PrimePoly h{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    PrimePoly acc{1};
    PrimePoly base = h;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = prime_poly_mod(prime_poly_mul(acc, base, p), m, p);
      base = prime_poly_mod(prime_poly_mul(base, base, p), m, p);
    }
    h = acc;
    PrimePoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (prime_poly_gcd(diff, m, p).size() > 1) return false;
  }
  return true;
}

}  // namespace detail

/// The finite field GF(p^d) = F_p[a]/(modulus), with log/antilog tables.
///
/// Copies share the immutable tables. Field size is limited to 2^20 elements.
class GaloisField {
 public:
  using Element = GfElem;

  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  /// `modulus` lists coefficients lowest degree first (monic, length degree+1).
  /// An empty modulus selects the first primitive polynomial of that degree.
  GaloisField(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> modulus = {},
              std::string symbol = "a") {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (degree == 0) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
      q *= p;
      if (q > kMaxSize) throw std::invalid_argument("field too large for table arithmetic");
    }
    if (modulus.empty()) modulus = default_modulus(p, degree);
    if (modulus.size() != degree + 1)
      throw std::invalid_argument("modulus degree does not match the extension degree");
    for (auto c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!detail::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is not irreducible");

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->degree = degree;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    t->symbol = std::move(symbol);
    t->generator = degree >= 2 ? p : (p - t->modulus[0]) % p;
    tables_ = t;

    std::uint32_t primitive = 0;
    if (is_primitive_slow(t->generator)) {
      primitive = t->generator;
    } else {
      for (std::uint32_t v = 1; v < t->q; ++v) {
        if (is_primitive_slow(v)) {
          primitive = v;
          break;
        }
      }
    }
    t->generator_is_primitive = primitive == t->generator;
    const std::uint32_t group = t->q - 1;
    t->exp.assign(2 * static_cast<std::size_t>(group) + 1, 0);
    t->log.assign(t->q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      t->exp[i] = cur;
      t->log[cur] = i;
      cur = slow_mul(cur, primitive);
    }
    for (std::uint32_t i = group; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - group];
  }

  /// First monic polynomial (in index order) of the given degree whose root is primitive.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t degree) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) count *= p;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      std::vector<std::uint32_t> m(degree + 1, 0);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < degree; ++i, v /= p) m[i] = static_cast<std::uint32_t>(v % p);
      m[degree] = 1;
      if (m[0] == 0 || !detail::is_irreducible(m, p)) continue;
      try {
        GaloisField probe(p, degree, m, "a");
        if (probe.generator_is_primitive()) return m;
      } catch (const std::invalid_argument&) {
      }
    }
    throw std::invalid_argument("no primitive polynomial found");
  }

  std::uint32_t characteristic() const { return tables_->p; }
  std::uint32_t degree() const { return tables_->degree; }
  std::uint64_t size() const { return tables_->q; }
  const std::vector<std::uint32_t>& modulus() const { return tables_->modulus; }
  const std::string& symbol() const { return tables_->symbol; }
  bool generator_is_primitive() const { return tables_->generator_is_primitive; }

  GfElem zero() const { return {0}; }
  GfElem one() const { return {1}; }
  GfElem generator() const { return {tables_->generator}; }
  GfElem element_at(std::uint64_t index) const { return {static_cast<std::uint32_t>(index)}; }
  bool is_zero(GfElem x) const { return x.value == 0; }

  GfElem from_int(long long n) const {
    return {static_cast<std::uint32_t>(floor_mod(n, tables_->p))};
  }

  GfElem add(GfElem x, GfElem y) const {
    const std::uint32_t p = tables_->p;
    if (p == 2) return {x.value ^ y.value};
    std::uint32_t out = 0, place = 1, u = x.value, v = y.value;
    while (u != 0 || v != 0) {
      out += ((u % p + v % p) % p) * place;
      u /= p;
      v /= p;
      place *= p;
    }
    return {out};
  }

  GfElem neg(GfElem x) const {
    const std::uint32_t p = tables_->p;
    if (p == 2) return x;
    std::uint32_t out = 0, place = 1, u = x.value;
    while (u != 0) {
      out += ((p - u % p) % p) * place;
      u /= p;
      place *= p;
    }
    return {out};
  }

  GfElem sub(GfElem x, GfElem y) const { return add(x, neg(y)); }

  GfElem mul(GfElem x, GfElem y) const {
    if (x.value == 0 || y.value == 0) return {0};
    const auto& t = *tables_;
    return {t.exp[t.log[x.value] + t.log[y.value]]};
  }

  GfElem inv(GfElem x) const {
    if (x.value == 0) throw ArithmeticError("inverse of zero");
    const auto& t = *tables_;
    const std::uint32_t group = t.q - 1;
    return {t.exp[(group - t.log[x.value]) % group]};
  }

  GfElem div(GfElem x, GfElem y) const { return mul(x, inv(y)); }

  /// x^k with the exponent reduced modulo p^d - 1.
  GfElem pow(GfElem x, long long k) const {
    if (x.value == 0) {
      if (k > 0) return {0};
      if (k == 0) return {1};
      throw ArithmeticError("negative power of zero");
    }
    const auto& t = *tables_;
    const long long group = t.q - 1;
    const std::uint64_t e = static_cast<std::uint64_t>(floor_mod(k, group));
    return {t.exp[(std::uint64_t{t.log[x.value]} * e) % group]};
  }

  /// x^(p^j).
  GfElem frobenius(GfElem x, std::uint64_t j) const {
    if (x.value == 0) return x;
    const auto& t = *tables_;
    const std::uint64_t group = t.q - 1;
    const std::uint64_t e = detail::pow_mod(t.p, j % t.degree, group == 0 ? 1 : group);
    if (group <= 1) return x;
    return {t.exp[(std::uint64_t{t.log[x.value]} * e) % group]};
  }

  /// Discrete logarithm to the base of the named generator, when it is primitive.
  std::optional<std::uint32_t> log_generator(GfElem x) const {
    if (x.value == 0 || !tables_->generator_is_primitive) return std::nullopt;
    return tables_->log[x.value];
  }

  std::optional<GfElem> resolve_symbol(std::string_view name) const {
    if (name == tables_->symbol) return generator();
    return std::nullopt;
  }

  GfElem parse(std::string_view text) const { return parse_element(*this, text); }

  /// Powers of the generator when it is primitive ("a^2103"), else a
  /// polynomial in the generator ("a^3 + 2*a + 1"). Prime fields print integers.
  std::string format(GfElem x) const {
    const auto& t = *tables_;
    if (x.value == 0) return "0";
    if (t.degree == 1) return std::to_string(x.value);
    if (x.value == 1) return "1";
    if (t.generator_is_primitive) {
      const std::uint32_t k = t.log[x.value];
      return k == 1 ? t.symbol : t.symbol + "^" + std::to_string(k);
    }
    std::string out;
    std::vector<std::uint32_t> digits;
    for (std::uint32_t v = x.value; v != 0; v /= t.p) digits.push_back(v % t.p);
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (digits[i] == 0) continue;
      if (!out.empty()) out += " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? t.symbol : t.symbol + "^" + std::to_string(i));
      if (mono.empty())
        out += std::to_string(digits[i]);
      else if (digits[i] == 1)
        out += mono;
      else
        out += std::to_string(digits[i]) + "*" + mono;
    }
    return out;
  }

  GfElem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, tables_->q - 1);
    return {dist(rng)};
  }

  GfElem random_nonzero(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(1, tables_->q - 1);
    return {dist(rng)};
  }

  std::string describe() const {
    const auto& t = *tables_;
    std::string m;
    for (std::size_t i = t.modulus.size(); i-- > 0;) {
      if (t.modulus[i] == 0) continue;
      if (!m.empty()) m += " + ";
      const std::string mono =
          i == 0 ? "" : (i == 1 ? t.symbol : t.symbol + "^" + std::to_string(i));
      if (mono.empty())
        m += std::to_string(t.modulus[i]);
      else if (t.modulus[i] == 1)
        m += mono;
      else
        m += std::to_string(t.modulus[i]) + "*" + mono;
    }
    return "GF(" + std::to_string(t.p) + "^" + std::to_string(t.degree) + ") with " + m + " = 0";
  }

 private:
  struct Tables {
    std::uint32_t p = 2;
    std::uint32_t degree = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    std::string symbol;
    std::uint32_t generator = 0;
    bool generator_is_primitive = false;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
  };

  detail::PrimePoly to_poly(std::uint32_t v) const {
    detail::PrimePoly out;
    for (; v != 0; v /= tables_->p) out.push_back(v % tables_->p);
    return out;
  }

  std::uint32_t from_poly(const detail::PrimePoly& f) const {
    std::uint32_t out = 0, place = 1;
    for (auto c : f) {
      out += c * place;
      place *= tables_->p;
    }
    return out;
  }

  std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const {
    const auto& t = *tables_;
    return from_poly(
        detail::prime_poly_mod(detail::prime_poly_mul(to_poly(x), to_poly(y), t.p), t.modulus, t.p));
  }

  std::uint32_t slow_pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e > 0) {
      if (e & 1) acc = slow_mul(acc, x);
      x = slow_mul(x, x);
      e >>= 1;
    }
    return acc;
  }

  bool is_primitive_slow(std::uint32_t x) const {
    if (x == 0) return false;
    const std::uint64_t group = tables_->q - 1;
    for (auto r : detail::prime_factors(group))
      if (slow_pow(x, group / r) == 1) return false;
    return true;
  }

  std::shared_ptr<Tables> tables_;
};

namespace gfpoly {

// Univariate polynomials over a GaloisField, lowest degree first, no trailing zeros.
using Poly = std::vector<GfElem>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back().value == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly add(const GaloisField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const GfElem x = i < a.size() ? a[i] : GfElem{};
    const GfElem y = i < b.size() ? b[i] : GfElem{};
    out[i] = F.add(x, y);
  }
  trim(out);
  return out;
}

inline Poly neg(const GaloisField& F, Poly a) {
  for (auto& c : a) c = F.neg(c);
  return a;
}

inline Poly sub(const GaloisField& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

inline Poly scale(const GaloisField& F, GfElem c, Poly a) {
  if (c.value == 0) return {};
  for (auto& x : a) x = F.mul(c, x);
  return a;
}

inline Poly mul(const GaloisField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].value == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

/// a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const GaloisField& F, Poly a, const Poly& b) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {Poly{}, std::move(a)};
  Poly q(a.size() - b.size() + 1);
  const GfElem lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const GfElem c = F.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

inline Poly make_monic(const GaloisField& F, Poly a) {
  if (a.empty() || a.back().value == 1) return a;
  const GfElem c = F.inv(a.back());
  return scale(F, c, std::move(a));
}

/// Monic gcd (zero if both inputs are zero).
inline Poly gcd(const GaloisField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

inline Poly exact_div(const GaloisField& F, const Poly& a, const Poly& b) {
  if (b.size() == 1 && b[0].value == 1) return a;
  return divmod(F, a, b).first;
}

}  // namespace gfpoly

}  // namespace skewrs

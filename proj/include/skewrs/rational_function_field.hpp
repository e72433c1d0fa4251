#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewrs/field_concepts.hpp"
#include "skewrs/galois_field.hpp"

namespace skewrs {

/// num/den over F_q with gcd(num, den) = 1 and den monic. Zero is 0/1.
struct RationalFunction {
  gfpoly::Poly num;
  gfpoly::Poly den{GfElem{1}};

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// The rational function field F_q(z) with the F_q-automorphism
/// sigma(z) = (a z + b) / (c z + d).
class RationalFunctionField {
 public:
  using Element = RationalFunction;

  /// Coefficients of the Moebius substitution z -> (a z + b) / (c z + d).
  struct Mobius {
    GfElem a, b, c, d;
  };

  RationalFunctionField(GaloisField base, Mobius sigma, std::string variable = "z")
      : base_(std::move(base)), variable_(std::move(variable)) {
    if (variable_ == base_.symbol())
      throw std::invalid_argument("indeterminate name clashes with the base field generator");
    const GfElem det = base_.sub(base_.mul(sigma.a, sigma.d), base_.mul(sigma.b, sigma.c));
    if (det.value == 0) throw std::invalid_argument("Moebius coefficients must have ad - bc != 0");
    // Order in PGL2(F_q): smallest k with M^k a scalar matrix.
    const std::uint64_t q = base_.size();
    const std::uint64_t bound = q * (q * q - 1);
    powers_.push_back(Mobius{base_.one(), base_.zero(), base_.zero(), base_.one()});
    Mobius cur = sigma;
    for (std::uint64_t k = 1; k <= bound; ++k) {
      if (cur.b.value == 0 && cur.c.value == 0 && cur.a == cur.d) break;
      powers_.push_back(cur);
      cur = compose(cur, sigma);
    }
    order_ = static_cast<int>(powers_.size());
  }

  const GaloisField& base() const { return base_; }
  const std::string& variable() const { return variable_; }
  Mobius mobius(long long k = 1) const { return powers_[floor_mod(k, order_)]; }

  FieldKind kind() const { return FieldKind::RationalFunction; }
  int order() const { return order_; }
  std::uint64_t characteristic() const { return base_.characteristic(); }

  Element zero() const { return {}; }
  Element one() const { return constant(base_.one()); }
  Element from_int(long long n) const { return constant(base_.from_int(n)); }
  Element constant(GfElem c) const {
    Element out;
    if (c.value != 0) out.num = {c};
    return out;
  }
  /// The indeterminate z.
  Element generator() const { return Element{{GfElem{0}, GfElem{1}}, {GfElem{1}}}; }
  bool is_zero(const Element& x) const { return x.num.empty(); }

  /// Builds num/den in canonical form.
  Element make(gfpoly::Poly num, gfpoly::Poly den) const {
    gfpoly::trim(num);
    gfpoly::trim(den);
    if (den.empty()) throw ArithmeticError("rational function with zero denominator");
    if (num.empty()) return zero();
    const gfpoly::Poly g = gfpoly::gcd(base_, num, den);
    if (g.size() > 1) {
      num = gfpoly::exact_div(base_, num, g);
      den = gfpoly::exact_div(base_, den, g);
    }
    if (den.back().value != 1) {
      const GfElem c = base_.inv(den.back());
      num = gfpoly::scale(base_, c, std::move(num));
      den = gfpoly::scale(base_, c, std::move(den));
    }
    return Element{std::move(num), std::move(den)};
  }

  Element add(const Element& x, const Element& y) const {
    if (x.num.empty()) return y;
    if (y.num.empty()) return x;
    if (x.den == y.den) return make(gfpoly::add(base_, x.num, y.num), x.den);
    const gfpoly::Poly g = gfpoly::gcd(base_, x.den, y.den);
    const gfpoly::Poly xd = gfpoly::exact_div(base_, x.den, g);
    const gfpoly::Poly yd = gfpoly::exact_div(base_, y.den, g);
    gfpoly::Poly num =
        gfpoly::add(base_, gfpoly::mul(base_, x.num, yd), gfpoly::mul(base_, y.num, xd));
    return make(std::move(num), gfpoly::mul(base_, xd, y.den));
  }

  Element neg(const Element& x) const { return Element{gfpoly::neg(base_, x.num), x.den}; }
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

  Element mul(const Element& x, const Element& y) const {
    if (x.num.empty() || y.num.empty()) return zero();
    // Cross-cancellation keeps the product reduced without a final gcd.
    const gfpoly::Poly g1 = gfpoly::gcd(base_, x.num, y.den);
    const gfpoly::Poly g2 = gfpoly::gcd(base_, y.num, x.den);
    gfpoly::Poly num = gfpoly::mul(base_, gfpoly::exact_div(base_, x.num, g1),
                                   gfpoly::exact_div(base_, y.num, g2));
    gfpoly::Poly den = gfpoly::mul(base_, gfpoly::exact_div(base_, x.den, g2),
                                   gfpoly::exact_div(base_, y.den, g1));
    return Element{std::move(num), std::move(den)};
  }

  Element inv(const Element& x) const {
    if (x.num.empty()) throw ArithmeticError("inverse of zero");
    const GfElem c = base_.inv(x.num.back());
    return Element{gfpoly::scale(base_, c, x.den), gfpoly::scale(base_, c, x.num)};
  }

  Element div(const Element& x, const Element& y) const { return mul(x, inv(y)); }
  Element pow(const Element& x, long long k) const { return generic_pow(*this, x, k); }

  /// sigma^k: substitute z -> M^k(z) and re-reduce.
  Element sigma(const Element& x, long long k = 1) const {
    const long long j = floor_mod(k, order_);
    if (j == 0 || x.num.empty()) return x;
    const Mobius& m = powers_[j];
    const int df = gfpoly::degree(x.num);
    const int dg = gfpoly::degree(x.den);
    const int top = std::max(df, dg);
    const gfpoly::Poly denom_linear = linear(m.c, m.d);
    std::vector<gfpoly::Poly> denom_powers{{GfElem{1}}};
    for (int i = 1; i <= top; ++i)
      denom_powers.push_back(gfpoly::mul(base_, denom_powers.back(), denom_linear));
    const gfpoly::Poly numer_linear = linear(m.a, m.b);
    gfpoly::Poly num = homogenize(x.num, numer_linear, denom_powers);
    gfpoly::Poly den = homogenize(x.den, numer_linear, denom_powers);
    if (dg >= df)
      num = gfpoly::mul(base_, num, denom_powers[dg - df]);
    else
      den = gfpoly::mul(base_, den, denom_powers[df - dg]);
    return make(std::move(num), std::move(den));
  }

  std::optional<Element> resolve_symbol(std::string_view name) const {
    if (name == variable_) return generator();
    if (auto c = base_.resolve_symbol(name)) return constant(*c);
    return std::nullopt;
  }

  Element parse(std::string_view text) const { return parse_element(*this, text); }

  std::string format_poly(const gfpoly::Poly& f) const {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (f[i].value == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string c = base_.format(f[i]);
      if (i == 0) {
        out += c;
        continue;
      }
      const std::string mono = i == 1 ? variable_ : variable_ + "^" + std::to_string(i);
      if (f[i].value == 1)
        out += mono;
      else if (is_atomic_text(c))
        out += c + "*" + mono;
      else
        out += "(" + c + ")*" + mono;
    }
    return out;
  }

  std::string format(const Element& x) const {
    if (x.num.empty()) return "0";
    const std::string num = format_poly(x.num);
    if (x.den.size() == 1) return num;
    const std::string den = format_poly(x.den);
    const auto wrap = [](const std::string& s) { return is_atomic_text(s) ? s : "(" + s + ")"; };
    return wrap(num) + "/" + wrap(den);
  }

  /// Ratio of random polynomials of degree at most `max_degree`.
  Element random(Rng& rng, int max_degree) const {
    gfpoly::Poly num(max_degree + 1), den;
    for (auto& c : num) c = base_.random(rng);
    do {
      den.resize(max_degree + 1);
      for (auto& c : den) c = base_.random(rng);
      gfpoly::trim(den);
    } while (den.empty());
    return make(std::move(num), std::move(den));
  }
  Element random(Rng& rng) const { return random(rng, 2); }

  Element random_nonzero(Rng& rng) const {
    Element x;
    do x = random(rng);
    while (x.num.empty());
    return x;
  }

  std::string describe() const {
    const Mobius& m = powers_.size() > 1 ? powers_[1] : powers_[0];
    const auto lin = [&](GfElem u, GfElem v) { return format_poly(linear(u, v)); };
    return "F_" + std::to_string(base_.size()) + "(" + variable_ + ") over " + base_.describe() +
           ", sigma(" + variable_ + ") = (" + lin(m.a, m.b) + ")/(" + lin(m.c, m.d) + ") (order " +
           std::to_string(order_) + ")";
  }

 private:
  gfpoly::Poly linear(GfElem slope, GfElem intercept) const {
    gfpoly::Poly p{intercept, slope};
    gfpoly::trim(p);
    return p;
  }

  // Sum_i f_i A^i B^(deg f - i) by homogeneous Horner, A linear.
  gfpoly::Poly homogenize(const gfpoly::Poly& f, const gfpoly::Poly& numer_linear,
                          const std::vector<gfpoly::Poly>& denom_powers) const {
    const int df = gfpoly::degree(f);
    gfpoly::Poly h{f[df]};
    for (int k = 1; k <= df; ++k) {
      h = gfpoly::mul(base_, h, numer_linear);
      h = gfpoly::add(base_, h, gfpoly::scale(base_, f[df - k], denom_powers[k]));
    }
    return h;
  }

  Mobius compose(const Mobius& x, const Mobius& y) const {
    const auto& F = base_;
    return Mobius{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
                  F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
  }

  GaloisField base_;
  std::string variable_;
  std::vector<Mobius> powers_;
  int order_ = 1;
};

}  // namespace skewrs

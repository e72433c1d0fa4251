#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skewrs/field_concepts.hpp"
#include "skewrs/galois_field.hpp"

namespace skewrs {

/// GF(p^d) with sigma = Frob^e, i.e. sigma(x) = x^(p^e).
///
/// The order of sigma is d / gcd(d, e).
class FiniteField {
 public:
  using Element = GfElem;

  FiniteField(GaloisField base, std::uint32_t frobenius_power)
      : base_(std::move(base)), frobenius_power_(frobenius_power % base_.degree()) {
    const std::uint32_t d = base_.degree();
    order_ = frobenius_power_ == 0 ? 1 : static_cast<int>(d / std::gcd(d, frobenius_power_));
  }

  const GaloisField& base() const { return base_; }
  std::uint32_t frobenius_power() const { return frobenius_power_; }

  FieldKind kind() const { return FieldKind::FiniteField; }
  int order() const { return order_; }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::uint64_t size() const { return base_.size(); }

  Element zero() const { return base_.zero(); }
  Element one() const { return base_.one(); }
  Element from_int(long long n) const { return base_.from_int(n); }
  Element generator() const { return base_.generator(); }
  Element element_at(std::uint64_t i) const { return base_.element_at(i); }
  bool is_zero(Element x) const { return x.value == 0; }

  Element add(Element x, Element y) const { return base_.add(x, y); }
  Element sub(Element x, Element y) const { return base_.sub(x, y); }
  Element neg(Element x) const { return base_.neg(x); }
  Element mul(Element x, Element y) const { return base_.mul(x, y); }
  Element inv(Element x) const { return base_.inv(x); }
  Element div(Element x, Element y) const { return base_.div(x, y); }
  Element pow(Element x, long long k) const { return base_.pow(x, k); }

  Element sigma(Element x, long long k = 1) const {
    const long long j = floor_mod(k, order_);
    return base_.frobenius(x, static_cast<std::uint64_t>(j) * frobenius_power_);
  }

  std::optional<Element> resolve_symbol(std::string_view name) const {
    return base_.resolve_symbol(name);
  }
  Element parse(std::string_view text) const { return parse_element(*this, text); }
  std::string format(Element x) const { return base_.format(x); }

  Element random(Rng& rng) const { return base_.random(rng); }
  Element random_nonzero(Rng& rng) const { return base_.random_nonzero(rng); }

  std::string describe() const {
    return base_.describe() + ", sigma = Frobenius^" + std::to_string(frobenius_power_) +
           " (order " + std::to_string(order_) + ")";
  }

 private:
  GaloisField base_;
  std::uint32_t frobenius_power_;
  int order_ = 1;
};

}  // namespace skewrs

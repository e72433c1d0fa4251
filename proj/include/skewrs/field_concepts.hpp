#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "skewrs/errors.hpp"

namespace skewrs {

using Rng = std::mt19937_64;

enum class FieldKind { FiniteField, RationalFunction, Cyclotomic };

inline std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::FiniteField:
      return "finite-field";
    case FieldKind::RationalFunction:
      return "rational-function";
    case FieldKind::Cyclotomic:
      return "cyclotomic";
  }
  return "unknown";
}

/// A field context L together with an automorphism sigma of finite order.
///
/// Elements are plain values in canonical form, so `==` on elements is field
/// equality. All arithmetic goes through the context, which must outlive
/// every polynomial or matrix built on it.
template <class F>
concept SkewField = std::copy_constructible<F> &&
    requires(const F& f, const typename F::Element& a, const typename F::Element& b,
             long long k, Rng& rng, std::string_view text) {
  requires std::regular<typename F::Element>;
  { f.kind() } -> std::same_as<FieldKind>;
  { f.order() } -> std::convertible_to<int>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(k) } -> std::same_as<typename F::Element>;
  { f.generator() } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, b) } -> std::same_as<typename F::Element>;
  { f.sub(a, b) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.mul(a, b) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.div(a, b) } -> std::same_as<typename F::Element>;
  { f.pow(a, k) } -> std::same_as<typename F::Element>;
  { f.sigma(a, k) } -> std::same_as<typename F::Element>;
  { f.resolve_symbol(text) } -> std::same_as<std::optional<typename F::Element>>;
  { f.parse(text) } -> std::same_as<typename F::Element>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.random(rng) } -> std::same_as<typename F::Element>;
  { f.random_nonzero(rng) } -> std::same_as<typename F::Element>;
  { f.describe() } -> std::same_as<std::string>;
};

/// Finite fields whose elements can be enumerated by index.
template <class F>
concept EnumerableField = SkewField<F> && requires(const F& f, std::uint64_t i) {
  { f.size() } -> std::convertible_to<std::uint64_t>;
  { f.element_at(i) } -> std::same_as<typename F::Element>;
};

template <SkewField F>
using ElementOf = typename F::Element;

/// sigma^k(x); negative k wraps modulo the order of sigma.
template <SkewField F>
ElementOf<F> apply_sigma(const F& field, long long k, const ElementOf<F>& x) {
  return field.sigma(x, k);
}

/// True iff x lies in the fixed subfield of sigma.
template <SkewField F>
bool fixed_field_check(const F& field, const ElementOf<F>& x) {
  return field.sigma(x, 1) == x;
}

/// Checks that sigma has exactly the advertised order on the field generator.
template <SkewField F>
bool sigma_order_is_exact(const F& field) {
  const auto gen = field.generator();
  const int n = field.order();
  auto cur = gen;
  for (int k = 1; k < n; ++k) {
    cur = field.sigma(cur, 1);
    if (cur == gen) return false;
  }
  return field.sigma(cur, 1) == gen;
}

/// Square-and-multiply exponentiation usable by every backend.
template <class F>
typename F::Element generic_pow(const F& field, typename F::Element base, long long exponent) {
  if (exponent < 0) {
    base = field.inv(base);
    exponent = -exponent;
  }
  auto result = field.one();
  while (exponent > 0) {
    if (exponent & 1) result = field.mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = field.mul(base, base);
  }
  return result;
}

/// Returns n mod m in [0, m).
inline long long floor_mod(long long n, long long m) {
  const long long r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace skewrs

#pragma once

#include <vector>

#include "skewrs/skewrs.hpp"

namespace testing_support {

using namespace skewrs;

inline FiniteField gf4096_frob10() {
  return FiniteField(GaloisField(2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}), 10);
}

inline FiniteField gf16_frob() { return FiniteField(GaloisField(2, 4), 1); }

inline RationalFunctionField f4z() {
  const GaloisField f4(2, 2, {1, 1, 1});
  return RationalFunctionField(f4, {f4.one(), f4.parse("a"), f4.one(), f4.parse("a^2")});
}

inline CyclotomicField q_chi7() { return CyclotomicField(7, 3); }

template <SkewField F>
SkewPoly<F> random_poly(const F& field, int degree, Rng& rng) {
  std::vector<ElementOf<F>> c(degree + 1);
  for (auto& x : c) x = field.random(rng);
  c.back() = field.random_nonzero(rng);
  return SkewPoly<F>(field, c);
}

}  // namespace testing_support

#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewrs;

namespace {

// Schoolbook product of base-p digit vectors modulo the field modulus.
std::uint32_t slow_mul(const GaloisField& f, std::uint32_t x, std::uint32_t y) {
  const std::uint32_t p = f.characteristic();
  const std::uint32_t d = f.degree();
  std::vector<std::uint32_t> a(d), b(d), prod(2 * d, 0);
  for (std::uint32_t i = 0; i < d; ++i, x /= p, y /= p) {
    a[i] = x % p;
    b[i] = y % p;
  }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t k = 2 * d - 1; k >= d; --k) {
    const std::uint32_t c = prod[k];
    for (std::uint32_t i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = d; i-- > 0;) out = out * p + prod[i];
  return out;
}

}  // namespace

class GaloisFieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(GaloisFieldAxioms, RandomTriples) {
  const auto [p, d] = GetParam();
  const GaloisField f(p, d);
  Rng rng(p * 100 + d);
  for (int i = 0; i < 1000; ++i) {
    const auto x = f.random(rng), y = f.random(rng), z = f.random(rng);
    EXPECT_EQ(f.add(x, y), f.add(y, x));
    EXPECT_EQ(f.mul(x, y), f.mul(y, x));
    EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
    EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    EXPECT_EQ(f.sub(f.add(x, y), y), x);
    EXPECT_EQ(f.mul(x, y).value, slow_mul(f, x.value, y.value));
    if (!f.is_zero(x)) {
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, GaloisFieldAxioms,
                         ::testing::Values(std::pair{2u, 4u}, std::pair{2u, 12u}, std::pair{3u, 2u},
                                           std::pair{5u, 1u}, std::pair{7u, 3u}));

TEST(GaloisField, DefaultModulusIsPrimitive) {
  const GaloisField f(2, 4);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_TRUE(f.generator_is_primitive());
  EXPECT_EQ(GaloisField(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(GaloisField, FrobeniusMatchesRepeatedPowers) {
  const GaloisField f(3, 4);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = f.random(rng);
    auto expect = x;
    for (std::uint32_t j = 0; j < 6; ++j) {
      EXPECT_EQ(f.frobenius(x, j), expect);
      expect = f.mul(f.mul(expect, expect), expect);
    }
  }
}

TEST(GaloisField, PowerWrapsModuloGroupOrder) {
  const GaloisField f(2, 4);
  const auto a = f.generator();
  EXPECT_EQ(f.pow(a, 15), f.one());
  EXPECT_EQ(f.pow(a, -1), f.inv(a));
  EXPECT_EQ(f.pow(f.zero(), 0), f.one());
  EXPECT_THROW(f.pow(f.zero(), -1), ArithmeticError);
  EXPECT_THROW(f.inv(f.zero()), ArithmeticError);
}

TEST(GaloisField, FormatParseRoundTrip) {
  for (const GaloisField& f : {GaloisField(2, 12), GaloisField(3, 3), GaloisField(7, 1)}) {
    Rng rng(f.size());
    for (int i = 0; i < 200; ++i) {
      const auto x = f.random(rng);
      EXPECT_EQ(f.parse(f.format(x)), x) << f.format(x);
    }
  }
}

TEST(GaloisField, NonPrimitiveGeneratorPrintsPolynomially) {
  // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5.
  const GaloisField f(2, 4, {1, 1, 1, 1, 1});
  EXPECT_FALSE(f.generator_is_primitive());
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = f.random(rng);
    EXPECT_EQ(f.parse(f.format(x)), x);
  }
  EXPECT_EQ(f.pow(f.generator(), 5), f.one());
}

TEST(GaloisField, RejectsBadParameters) {
  EXPECT_THROW(GaloisField(4, 2), std::invalid_argument);
  EXPECT_THROW(GaloisField(2, 0), std::invalid_argument);
  EXPECT_THROW(GaloisField(2, 4, {1, 0, 1, 0, 1}), std::invalid_argument);  // (x^2+x+1)^2
  EXPECT_THROW(GaloisField(2, 4, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(GaloisField(2, 21), std::invalid_argument);
}

TEST(GfPoly, DivmodAndGcd) {
  const GaloisField f(2, 4);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    gfpoly::Poly a(6), b(3);
    for (auto& c : a) c = f.random(rng);
    for (auto& c : b) c = f.random(rng);
    b.back() = f.random_nonzero(rng);
    gfpoly::trim(a);
    const auto [q, r] = gfpoly::divmod(f, a, b);
    EXPECT_EQ(gfpoly::add(f, gfpoly::mul(f, q, b), r), a);
    EXPECT_LT(gfpoly::degree(r), gfpoly::degree(b));
    const auto g = gfpoly::gcd(f, gfpoly::mul(f, a, b), b);
    EXPECT_EQ(g, gfpoly::make_monic(f, b));
  }
}

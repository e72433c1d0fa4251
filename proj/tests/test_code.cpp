#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace skewrs;
using namespace testing_support;

namespace {

template <SkewField F>
void check_structure(const F& L, const ElementOf<F>& alpha, std::size_t r, std::size_t delta) {
  const auto code = build_code(L, alpha, r, delta);
  const std::size_t n = code.length();
  ASSERT_EQ(n, static_cast<std::size_t>(L.order()));
  EXPECT_EQ(code.beta(), L.div(L.sigma(alpha, 1), alpha));
  EXPECT_EQ(rank(code.evaluation()), n);
  EXPECT_EQ(code.generator().degree(), static_cast<int>(delta - 1));
  EXPECT_TRUE(code.generator().is_monic());
  EXPECT_TRUE(left_divmod(SkewPoly<F>::x_pow_minus_one(L, n), code.generator()).remainder.is_zero());

  const auto roots = full_beta_decomposition_test(code.generator(), code.evaluation());
  ASSERT_TRUE(roots.has_value());
  std::vector<std::size_t> expect(delta - 1);
  std::iota(expect.begin(), expect.end(), r);
  for (auto& k : expect) k %= n;
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(*roots, expect);

  Rng rng(delta * 31 + r);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_poly(L, static_cast<int>(n) - 1, rng);
    const auto v = row_times<F>(f.to_vector(n), code.evaluation());
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(v[j], right_eval(f, code.beta_root(j)));
  }
}

// (sigma(c_{n-1}), sigma(c_0), ..., sigma(c_{n-2})) is x c reduced mod x^n - 1.
template <SkewField F>
void check_shift(const SkewRSCode<F>& code, int count, std::uint64_t seed) {
  const F& L = code.field();
  const std::size_t n = code.length();
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto m = random_poly(L, static_cast<int>(code.dimension()) - 1, rng);
    const auto c = encode(code, m).to_vector(n);
    std::vector<ElementOf<F>> shifted(n);
    for (std::size_t j = 0; j < n; ++j) shifted[j] = L.sigma(c[(j + n - 1) % n], 1);
    EXPECT_TRUE(left_divmod(SkewPoly<F>(L, shifted), code.generator()).remainder.is_zero());
  }
}

}  // namespace

TEST(Code, StructureFinite) {
  static const auto L = gf4096_frob10();
  for (std::size_t delta = 2; delta <= 6; ++delta)
    for (std::size_t r = 0; r < 6; ++r) check_structure(L, L.generator(), r, delta);
}

TEST(Code, StructureRational) {
  static const auto L = f4z();
  check_structure(L, L.generator(), 0, 5);
  check_structure(L, L.generator(), 3, 3);
}

TEST(Code, StructureCyclotomic) {
  static const auto L = q_chi7();
  check_structure(L, L.generator(), 0, 5);
  check_structure(L, L.generator(), 4, 4);
}

TEST(Code, ShiftInvariance) {
  static const auto L1 = gf4096_frob10();
  check_shift(build_code(L1, L1.generator(), 0, 5), 100, 1);
  static const auto L2 = f4z();
  check_shift(build_code(L2, L2.generator(), 0, 5), 100, 2);
  static const auto L3 = q_chi7();
  check_shift(build_code(L3, L3.generator(), 0, 5), 100, 3);
}

TEST(Code, SmallCodesAreMds) {
  static const auto L16 = gf16_frob();
  const auto c16 = build_code(L16, find_normal_element(L16), 0, 3);
  EXPECT_EQ(c16.dimension(), 2u);
  EXPECT_EQ(min_distance_oracle(c16), 3u);

  static const FiniteField L8(GaloisField(2, 3), 1);
  const auto c8 = build_code(L8, find_normal_element(L8), 0, 3);
  EXPECT_EQ(c8.dimension(), 1u);
  EXPECT_EQ(min_distance_oracle(c8), 3u);
  EXPECT_EQ(hamming_weight<FiniteField>(L8, c8.generator().to_vector(3)), 3u);

  for (std::size_t delta = 2; delta <= 4; ++delta)
    for (std::size_t r = 0; r < 4; ++r)
      EXPECT_EQ(min_distance_oracle(build_code(L16, find_normal_element(L16), r, delta)), delta);
}

TEST(Code, EnumerationBudget) {
  static const auto L16 = gf16_frob();
  const auto c = build_code(L16, find_normal_element(L16), 0, 2);  // 16^3 words
  EXPECT_EQ(enumerate_codewords(c, 4096).size(), 4096u);
  EXPECT_THROW(enumerate_codewords(c, 4095), std::length_error);
}

TEST(Code, NormalElements) {
  const auto L16 = gf16_frob();
  EXPECT_FALSE(is_normal(L16, L16.generator()));  // trace(a) = 0 for x^4 + x + 1
  EXPECT_FALSE(is_normal(L16, L16.zero()));
  EXPECT_TRUE(is_normal(L16, find_normal_element(L16)));
  EXPECT_THROW(build_code(L16, L16.generator(), 0, 3), std::invalid_argument);
  std::size_t normal = 0;
  for (std::uint64_t i = 0; i < L16.size(); ++i) normal += is_normal(L16, L16.element_at(i));
  EXPECT_EQ(normal, 8u);  // normal elements of GF(16) over GF(2)
}

TEST(Code, ParameterErrors) {
  static const auto L = gf4096_frob10();
  EXPECT_THROW(build_code(L, L.generator(), 0, 1), std::invalid_argument);
  EXPECT_THROW(build_code(L, L.generator(), 0, 7), std::invalid_argument);
  const auto code = build_code(L, L.generator(), 0, 5);
  EXPECT_EQ(code.dimension(), 2u);
  EXPECT_EQ(code.correction_capability(), 2u);
  Rng rng(5);
  EXPECT_THROW(encode(code, random_poly(L, 2, rng)), std::invalid_argument);
  EXPECT_NO_THROW(encode(code, random_poly(L, 1, rng)));
}

TEST(Code, DecoderRootsAreShifted) {
  static const auto L = gf4096_frob10();
  const auto code = build_code(L, L.generator(), 2, 4);
  EXPECT_EQ(code.decoder_alpha(), L.sigma(L.generator(), 2));
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(code.decoder_evaluation()(i, j), code.evaluation()(i, (j + 2) % 6));
  EXPECT_EQ(code.decoder_conjugate(7), L.sigma(L.generator(), 9));
}

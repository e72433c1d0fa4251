#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace skewrs;
using namespace testing_support;

namespace {

// Leibniz expansion; characteristic 2 so signs do not matter.
GfElem leibniz_det(const Matrix<FiniteField>& m) {
  const auto& f = m.field();
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  GfElem det = f.zero();
  do {
    GfElem term = f.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
    det = f.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Matrix<FiniteField> random_matrix(const FiniteField& f, std::size_t r, std::size_t c, Rng& rng, int zero_bias) {
  Matrix<FiniteField> m(f, r, c);
  std::uniform_int_distribution<int> coin(0, 9);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(rng) < zero_bias ? f.zero() : f.random(rng);
  return m;
}

bool is_rref(const Matrix<FiniteField>& m) {
  const auto& f = m.field();
  long last_pivot = -1;
  bool zero_rows = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t p = 0;
    while (p < m.cols() && f.is_zero(m(i, p))) ++p;
    if (p == m.cols()) {
      zero_rows = true;
      continue;
    }
    if (zero_rows || static_cast<long>(p) <= last_pivot || !(m(i, p) == f.one())) return false;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != i && !f.is_zero(m(k, p))) return false;
    last_pivot = static_cast<long>(p);
  }
  return true;
}

}  // namespace

TEST(Matrix, RankAgreesWithDeterminant) {
  const auto f = gf16_frob();
  Rng rng(1);
  int singular = 0;
  for (int i = 0; i < 300; ++i) {
    const auto m = random_matrix(f, 4, 4, rng, 6);
    const bool nonsingular = !f.is_zero(leibniz_det(m));
    singular += !nonsingular;
    EXPECT_EQ(rank(m) == 4, nonsingular);
  }
  EXPECT_GT(singular, 10);
}

TEST(Matrix, RrefShapeAndIdempotence) {
  const auto f = gf4096_frob10();
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto m = random_matrix(f, 5, 7, rng, 5);
    const auto r = rref(m);
    EXPECT_TRUE(is_rref(r));
    EXPECT_EQ(rref(r), r);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    EXPECT_TRUE(is_rref(rcef(m).transpose()));
    EXPECT_EQ(rank(rcef(m)), rank(m));
  }
}

namespace {

template <SkewField F>
void check_solve(const F& f, int count, std::uint64_t seed) {
  Rng rng(seed);
  int solved = 0;
  while (solved < count) {
    Matrix<F> a(f, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = f.random(rng);
    if (rank(a) < 4) continue;
    std::vector<ElementOf<F>> x(4);
    for (auto& v : x) v = f.random(rng);
    const auto b = row_times<F>(x, a);
    ASSERT_EQ(solve_row_system<F>(a, b), x);
    ++solved;
  }
}

}  // namespace

TEST(Matrix, SolveRowSystemRoundTrip) {
  check_solve(gf4096_frob10(), 500, 3);
  check_solve(f4z(), 500, 31);
  check_solve(q_chi7(), 500, 32);
}

TEST(Matrix, RankOfProduct) {
  const auto f = gf16_frob();
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_matrix(f, 4, 5, rng, 6), b = random_matrix(f, 5, 3, rng, 6);
    EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
  }
  EXPECT_EQ(rank(Matrix<FiniteField>(f, 3, 3)), 0u);
}

// Rows (sigma^{k_j}(alpha), ..., sigma^{k_j + t - 1}(alpha)) for distinct k_j are
// independent when alpha is normal. Checked for every subset and every window start.
TEST(Matrix, ConjugateSubmatricesAreNonsingular) {
  const auto L = gf4096_frob10();
  const auto alpha = L.generator();
  const auto conj = conjugate_matrix(L, alpha);
  EXPECT_EQ(rank(conj), 6u);
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < 6; ++k)
      if (mask >> k & 1) ks.push_back(k);
    const std::size_t t = ks.size();
    for (std::size_t start = 0; start < 6; ++start) {
      Matrix<FiniteField> m(L, t, t);
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t l = 0; l < t; ++l) m(j, l) = L.sigma(alpha, ks[j] + start + l);
      ASSERT_EQ(rank(m), t) << "mask " << mask << " start " << start;
    }
  }
}

TEST(Matrix, SingularSystemThrows) {
  const auto f = gf4096_frob10();
  Matrix<FiniteField> sing(f, 2, 2);
  sing(0, 0) = sing(0, 1) = f.one();
  sing(1, 0) = sing(1, 1) = f.generator();
  const std::vector<GfElem> b{f.one(), f.one()};
  EXPECT_THROW(solve_row_system<FiniteField>(sing, b), ArithmeticError);
}

TEST(Matrix, LeftKernel) {
  const auto f = gf16_frob();
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_matrix(f, 6, 3, rng, 3);
    const auto k = left_kernel(a);
    EXPECT_EQ(k.rows(), 6 - rank(a));
    EXPECT_EQ(rank(k), k.rows());
    const auto prod = k * a;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) EXPECT_TRUE(f.is_zero(prod(r, c)));
  }
}

TEST(Matrix, CanonicalIndex) {
  const auto f = gf16_frob();
  const std::vector<GfElem> e2{f.zero(), f.zero(), f.one(), f.zero()};
  const std::vector<GfElem> scaled{f.zero(), f.generator(), f.zero(), f.zero()};
  const std::vector<GfElem> two{f.one(), f.zero(), f.one(), f.zero()};
  const std::vector<GfElem> zero(4, f.zero());
  EXPECT_EQ(canonical_index<FiniteField>(f, e2), 2);
  EXPECT_EQ(canonical_index<FiniteField>(f, scaled), -1);
  EXPECT_EQ(canonical_index<FiniteField>(f, two), -1);
  EXPECT_EQ(canonical_index<FiniteField>(f, zero), -1);
}

TEST(Matrix, DimensionErrors) {
  const auto f = gf16_frob();
  EXPECT_THROW(Matrix<FiniteField>(f, 2, 3) * Matrix<FiniteField>(f, 2, 3), std::invalid_argument);
  EXPECT_THROW(Matrix<FiniteField>::from_rows(f, {{f.one()}, {f.one(), f.one()}}), std::invalid_argument);
}

#include "properties.hpp"

#include <fracdq/densela.hpp>
#include <fracdq/error.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace fracdq;

namespace {

DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  DenseMatrix A(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) A(i, j++) = v;
    ++i;
  }
  return A;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST(LuFactor, IdentityIsTrivial) {
  const DenseMatrix I = DenseMatrix::identity(3);
  const LUFactors F = lu_factor(I);
  EXPECT_FALSE(F.singular());
  EXPECT_EQ(F.lower(), I);
  EXPECT_EQ(F.upper(), I);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(F.perm()[i], i);
}

TEST(LuFactor, PermutationMatrixSwapsRows) {
  const LUFactors F = lu_factor(from_rows({{0, 1}, {1, 0}}));
  EXPECT_FALSE(F.singular());
  EXPECT_EQ(F.perm()[0], 1u);
  EXPECT_EQ(F.perm()[1], 0u);
  EXPECT_EQ(F.lower(), DenseMatrix::identity(2));
  EXPECT_EQ(F.upper(), DenseMatrix::identity(2));
}

TEST(LuFactor, ReconstructsRandomMatrices) {
  const checks::CheckResult r = checks::check_lu_reconstruction();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(LuFactor, FlagsSingularAndNonFinite) {
  EXPECT_TRUE(lu_factor(from_rows({{1, 2}, {2, 4}})).singular());
  EXPECT_TRUE(lu_factor(DenseMatrix(3, 3)).singular());
  EXPECT_TRUE(lu_factor(from_rows({{1, std::nan("")}, {0, 1}})).singular());
  EXPECT_TRUE(lu_factor(from_rows({{1, 0}, {0, std::numeric_limits<double>::infinity()}})).singular());
  EXPECT_FALSE(lu_factor(from_rows({{1e-300, 0}, {0, 1}})).singular());
}

TEST(LuFactor, RejectsNonSquare) {
  EXPECT_THROW(lu_factor(DenseMatrix(2, 3)), DimensionMismatch);
  const std::vector<double> five(5, 1.0);
  EXPECT_THROW(lu_factor_in<double>(std::span<const double>(five), 2), DimensionMismatch);
}

TEST(LuSolve, SimpleSystems) {
  const std::vector<double> b = {1, 2, 3};
  EXPECT_EQ(lu_solve(lu_factor(DenseMatrix::identity(3)), b), b);
  const std::vector<double> x = lu_solve(lu_factor(from_rows({{2, 0}, {0, 4}})), std::vector<double>{2, 8});
  EXPECT_EQ(x, (std::vector<double>{1, 2}));
}

TEST(LuSolve, ManufacturedSolutions) {
  const checks::CheckResult r = checks::check_manufactured_solution();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(LuSolve, TransposedSystem) {
  const DenseMatrix A = from_rows({{4, 1, 0}, {2, 5, 1}, {0, 3, 6}});
  const std::vector<double> x = {1, -2, 0.5};
  std::vector<double> b(3, 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b[i] += A(j, i) * x[j];
  const std::vector<double> got = lu_solve_transposed(lu_factor(A), b);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(got[i], x[i], 1e-14);
}

TEST(LuSolve, ThrowsOnSingularOrSizeMismatch) {
  const LUFactors S = lu_factor(from_rows({{1, 2}, {2, 4}}));
  EXPECT_THROW(lu_solve(S, std::vector<double>{1, 1}), SingularMatrix);
  const LUFactors F = lu_factor(DenseMatrix::identity(2));
  EXPECT_THROW(lu_solve(F, std::vector<double>{1, 1, 1}), DimensionMismatch);
}

TEST(ConditionEstimate, KnownCases) {
  const DenseMatrix I = DenseMatrix::identity(7);
  EXPECT_EQ(condition_estimate(I, lu_factor(I)), 1.0);
  const DenseMatrix D = from_rows({{1, 0}, {0, 1e-8}});
  const double c = condition_estimate(D, lu_factor(D));
  EXPECT_GE(c, 1e7);
  EXPECT_LE(c, 1e9);
  const DenseMatrix S = from_rows({{1, 2}, {2, 4}});
  EXPECT_TRUE(std::isinf(condition_estimate(S, lu_factor(S))));
}

TEST(ConditionEstimate, WithinFactorTenOfTrueValue) {
  // 1-norm condition of this tridiagonal matrix, computed from its explicit inverse.
  const DenseMatrix A = from_rows({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  const LUFactors F = lu_factor(A);
  DenseMatrix inv(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<double> e(4, 0.0);
    e[j] = 1.0;
    const std::vector<double> col = lu_solve(F, e);
    for (std::size_t i = 0; i < 4; ++i) inv(i, j) = col[i];
  }
  const double truth = A.norm_1() * inv.norm_1();
  const double est = condition_estimate(A, F);
  EXPECT_LE(est, truth * (1.0 + 1e-12));
  EXPECT_GE(est, truth / 10.0);
}

TEST(ExtendedLu, AgreesWithDoubleWhenWellConditioned) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix A(40, 40);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j) A(i, j) = u(rng) + (i == j ? 40.0 : 0.0);
  std::vector<double> b(40);
  for (double& v : b) v = u(rng);
  const std::vector<double> xd = lu_solve(lu_factor(A), b);
  const std::vector<double> xe = lu_solve(lu_factor_extended(A), b);
  for (std::size_t i = 0; i < 40; ++i) EXPECT_NEAR(xd[i], xe[i], 1e-15);
}

TEST(ExtendedLu, ResolvesHilbertMatrixBeyondDoublePrecision) {
  // The exact 12 x 12 Hilbert matrix (condition ~1.7e16) held in extended
  // precision; its inverse has integer entries in closed form.
  constexpr int n = 12;
  std::vector<ExtendedReal> H(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H[i * n + j] = ExtendedReal{1} / static_cast<ExtendedReal>(i + j + 1);
  const ExtendedLUFactors F = lu_factor_in<ExtendedReal>(std::span<const ExtendedReal>(H), n);
  ASSERT_FALSE(F.singular());
  std::vector<double> e0(n, 0.0);
  e0[0] = 1.0;
  const std::vector<double> col = lu_solve(F, e0);
  for (int i = 0; i < n; ++i) {
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    const double c = binomial(i, i);
    const double exact = sign * (i + 1) * binomial(n + i, n - 1) * binomial(n, n - i - 1) * c * c;
    EXPECT_NEAR(col[i], exact, 1e-12 * std::abs(exact)) << "row " << i;
  }
}

TEST(Instrumentation, CountsFactorizations) {
  const std::size_t before = lu_factorization_count();
  lu_factor(DenseMatrix::identity(2));
  lu_factor_extended(DenseMatrix::identity(2));
  EXPECT_EQ(lu_factorization_count(), before + 2);
}

TEST(DenseMatrix, NormsAndProducts) {
  const DenseMatrix A = from_rows({{1, -2}, {3, 4}});
  EXPECT_EQ(A.norm_inf(), 7.0);
  EXPECT_EQ(A.norm_1(), 6.0);
  EXPECT_EQ(matvec(A, std::vector<double>{1, 1}), (std::vector<double>{-1, 7}));
  EXPECT_EQ(matmul(A, DenseMatrix::identity(2)), A);
  EXPECT_THROW(matvec(A, std::vector<double>{1, 1, 1}), DimensionMismatch);
  EXPECT_THROW(matmul(A, DenseMatrix(3, 3)), DimensionMismatch);
  EXPECT_EQ(norm_inf(std::vector<double>{-3, 2}), 3.0);
}

#include "properties.hpp"

#include <fracdq/error.hpp>
#include <fracdq/kernels.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace fracdq;

TEST(Kernel, ValuesAtCenter) {
  EXPECT_DOUBLE_EQ(Kernel(Family::MQ, 0.3).eval(0.4, 0.4), 0.3);
  EXPECT_EQ(Kernel(Family::GA, 17.0).eval(-2.0, -2.0), 1.0);
  EXPECT_DOUBLE_EQ(Kernel(Family::IM, 0.5).eval(0.0, 0.0), 2.0);
}

TEST(Kernel, InverseMultiquadricAtDistanceEpsilon) {
  const double eps = 0.7;
  EXPECT_NEAR(Kernel(Family::IM, eps).eval(1.0 + eps, 1.0), 1.0 / (eps * std::sqrt(2.0)), 1e-15);
}

TEST(Kernel, SecondDerivativeAtCenter) {
  const double eps = 0.8;
  EXPECT_NEAR(Kernel(Family::MQ, eps).eval_d2(0.1, 0.1), 1.0 / eps, 1e-15);
  EXPECT_NEAR(Kernel(Family::GA, eps).eval_d2(0.1, 0.1), -2.0 * eps, 1e-15);
  EXPECT_NEAR(Kernel(Family::IM, eps).eval_d2(0.1, 0.1), -1.0 / (eps * eps * eps), 1e-14);
}

TEST(Kernel, SecondDerivativeMatchesFiniteDifference) {
  const checks::CheckResult r = checks::check_kernel_finite_difference();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Kernel, RadialSymmetry) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (Family f : {Family::MQ, Family::IM, Family::GA}) {
    const Kernel k(f, 1.3);
    for (int s = 0; s < 100; ++s) {
      const double x = u(rng), c = u(rng);
      EXPECT_EQ(k.eval(x, c), k.eval(c, x));
      EXPECT_EQ(k.eval_d2(x, c), k.eval_d2(c, x));
    }
  }
}

TEST(Kernel, ValueRanges) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> eps_dist(0.1, 30.0);
  std::uniform_real_distribution<double> r_dist(0.0, 2.0);
  for (int s = 0; s < 500; ++s) {
    const double eps = eps_dist(rng);
    const double r = r_dist(rng);
    const double ga = Kernel(Family::GA, eps).eval(r, 0.0);
    EXPECT_GE(ga, 0.0);
    EXPECT_LE(ga, 1.0);
    EXPECT_GE(Kernel(Family::MQ, eps).eval(r, 0.0), eps);
    const double im = Kernel(Family::IM, eps).eval(r, 0.0);
    EXPECT_GT(im, 0.0);
    EXPECT_LE(im, 1.0 / eps);
  }
}

TEST(Kernel, ExtendedEvaluationAgreesWithDouble) {
  for (Family f : {Family::MQ, Family::IM, Family::GA}) {
    const Kernel k(f, 2.5);
    for (double x : {0.0, 0.3, 1.7}) {
      const double d = k.eval(x, 0.2);
      EXPECT_NEAR(static_cast<double>(k.eval_extended(x, 0.2)), d, 1e-15 * std::abs(d));
    }
  }
}

TEST(Kernel, RejectsBadShape) {
  EXPECT_THROW(Kernel(Family::MQ, 0.0), InvalidParameter);
  EXPECT_THROW(Kernel(Family::IM, -1.0), InvalidParameter);
  EXPECT_THROW(Kernel(Family::GA, std::numeric_limits<double>::infinity()), InvalidParameter);
  EXPECT_THROW(Kernel(Family::GA, std::nan("")), InvalidParameter);
}

TEST(DefaultShape, ScaledFormulas) {
  EXPECT_DOUBLE_EQ(default_shape(Family::MQ, 24, 1.0), 0.25);
  EXPECT_DOUBLE_EQ(default_shape(Family::IM, 24, 1.0), 0.4);
  EXPECT_DOUBLE_EQ(default_shape(Family::GA, 24, 1.0), 26.25);
  EXPECT_DOUBLE_EQ(default_shape(Family::MQ, 24, 2.0), 0.5);
  // Only MQ uses the interval length.
  EXPECT_DOUBLE_EQ(default_shape(Family::IM, 24, 2.0), 0.4);
  EXPECT_DOUBLE_EQ(default_shape(Family::GA, 24, 2.0), 26.25);
  EXPECT_THROW(default_shape(Family::MQ, 0, 1.0), InvalidParameter);
  EXPECT_THROW(default_shape(Family::MQ, 5, 0.0), InvalidParameter);
}

TEST(Family, ParseAndPrint) {
  EXPECT_EQ(parse_family("mq"), Family::MQ);
  EXPECT_EQ(parse_family("IM"), Family::IM);
  EXPECT_EQ(parse_family("Ga"), Family::GA);
  EXPECT_FALSE(parse_family("tps").has_value());
  EXPECT_EQ(to_string(Family::GA), "ga");
}

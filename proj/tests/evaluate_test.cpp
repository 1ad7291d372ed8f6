#include <cmath>

#include <gtest/gtest.h>

#include <grid.hpp>
#include <qjacobi/evaluate.hpp>

namespace qj = qjacobi;
using qj::testing::Gen;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(EvalRecurrence, DegreeZeroIsOne) {
  EXPECT_EQ(qj::eval_recurrence(0, qj::classify(0.93, -1.9), 0.3), 1.0);
}

TEST(EvalRecurrence, LinearRootOfSeed) {
  const auto p = qj::classify(0.93, -1.9);
  const double x = (p.beta - p.alpha) / (p.alpha + p.beta + 2.0);
  EXPECT_NEAR(x, -2.74757, 1e-5);
  EXPECT_NEAR(qj::eval_recurrence(1, p, x), 0.0, 1e-14);
}

TEST(EvalRecurrence, LegendreNormalization) {
  EXPECT_NEAR(qj::eval_recurrence(2, qj::classify(0, 0), 1.0), 1.0, 1e-15);
}

TEST(EvalRecurrence, DegenerateParametersThrow) {
  EXPECT_THROW(qj::eval_recurrence(2, qj::classify(-0.5, -1.5), 0.1), qj::error);
}

TEST(EvalSum, DegreeZeroIsOne) {
  for (double x : {-3.0, 0.0, 0.7}) EXPECT_EQ(qj::eval_sum(0, qj::classify(2.35, -1.5), x), 1.0);
}

TEST(EvalSum, SeedAtZero) {
  EXPECT_NEAR(qj::eval_sum(1, qj::classify(0.93, -1.9), 0.0), 1.415, 1e-14);
}

TEST(EvalSum, AgreesWithRecurrenceAtThresholdExample) {
  const auto p = qj::classify(2.35, -1.5);
  const double r = qj::eval_recurrence(5, p, 0.0);
  EXPECT_LT(rel_diff(qj::eval_sum(5, p, 0.0), r), qj::kEvalTol);
  EXPECT_LT(rel_diff(qj::eval_sum(5, p, 0.0, qj::SumMode::compensated), r), qj::kEvalTol);
}

TEST(EvalDerivative, SeedSlope) {
  const auto p = qj::classify(0.93, -1.9);
  for (double x : {-2.0, 0.0, 1.5}) EXPECT_NEAR(qj::eval_derivative(1, p, x), 0.5 * (0.93 - 1.9 + 2.0), 1e-15);
}

TEST(EvalDerivative, LegendreP2IsEven) {
  EXPECT_NEAR(qj::eval_derivative(2, qj::classify(0, 0), 0.0), 0.0, 1e-15);
}

TEST(EvalDerivative, MatchesFiniteDifferenceAtMinusOne) {
  const auto p = qj::classify(2.35, -1.5);
  const double h = 1e-6;
  const double fd = (qj::eval_recurrence(5, p, -1.0 + h) - qj::eval_recurrence(5, p, -1.0 - h)) / (2 * h);
  EXPECT_LT(rel_diff(qj::eval_derivative(5, p, -1.0), fd), qj::kFiniteDiffTol);
}

TEST(EvalProperty, RecurrenceMatchesCompensatedSum) {
  Gen g(0x51e7);
  for (int i = 0; i < 500; ++i) {
    const auto p = g.quasi();
    const int n = g.integer(0, 20);
    const double x = g.uniform(-1.5, 1.5);
    const double r = qj::eval_recurrence(n, p, x);
    const double s = qj::eval_sum(n, p, x, qj::SumMode::compensated);
    EXPECT_LT(rel_diff(s, r), qj::kEvalTol) << "n=" << n << " a=" << p.alpha << " b=" << p.beta << " x=" << x;
  }
}

TEST(EvalProperty, ReflectionSymmetry) {
  Gen g(0xa11ce);
  for (int i = 0; i < 500; ++i) {
    const auto p = i % 2 ? g.quasi() : g.orthogonal();
    const int n = g.integer(0, 20);
    const double x = g.uniform(-2.0, 2.0);
    const double lhs = qj::eval_recurrence(n, p, -x);
    const double rhs = (n % 2 ? -1.0 : 1.0) * qj::eval_recurrence(n, qj::reflect(p), x);
    EXPECT_LT(rel_diff(lhs, rhs), 1e-9) << "n=" << n << " x=" << x;
  }
}

TEST(EvalProperty, DerivativeMatchesFiniteDifference) {
  Gen g(0xd1ff);
  for (int i = 0; i < 300; ++i) {
    const auto p = g.quasi();
    const int n = g.integer(1, 15);
    const double x = g.uniform(-1.2, 1.2);
    const double h = 1e-6;
    const double fd = (qj::eval_recurrence(n, p, x + h) - qj::eval_recurrence(n, p, x - h)) / (2 * h);
    const double scale = std::max({1.0, std::abs(qj::eval_recurrence(n, p, x)), std::abs(fd)});
    EXPECT_LT(std::abs(qj::eval_derivative(n, p, x) - fd) / scale, qj::kFiniteDiffTol)
        << "n=" << n << " x=" << x;
  }
}

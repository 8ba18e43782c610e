#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include <induction/errors.hpp>
#include <induction/special_functions.hpp>

namespace induction::special {
namespace {

// 1 - sum_{j<a} C(n, j) x^j (1-x)^(n-j), n = a + b - 1, for integer shapes.
double binomial_tail_reference(int a, int b, double x) {
  const int n = a + b - 1;
  long double sum = 0.0L;
  long double coeff = 1.0L;
  for (int j = 0; j < a; ++j) {
    sum += coeff * std::pow(static_cast<long double>(x), j) *
           std::pow(1.0L - static_cast<long double>(x), n - j);
    coeff = coeff * (n - j) / (j + 1);
  }
  return static_cast<double>(1.0L - sum);
}

TEST(LogBeta, MatchesFactorialsForSmallIntegers) {
  // B(3, 4) = 2! 3! / 6! = 1/60
  EXPECT_NEAR(log_beta(3.0, 4.0), -std::log(60.0), 1e-14);
  EXPECT_NEAR(log_beta(1.0, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_beta(0.5, 0.5), std::log(M_PI), 1e-14);
}

TEST(LogBeta, StirlingBranchesAgreeWithLogGamma) {
  for (double a : {1.0, 4.0, 9.5, 10.0, 25.0, 300.0}) {
    for (double b : {1.0, 7.0, 10.0, 11.0, 80.0, 1000.0}) {
      const double direct = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
      EXPECT_NEAR(log_beta(a, b), direct, 1e-12 * std::max(1.0, std::abs(direct)))
          << "a=" << a << " b=" << b;
    }
  }
}

TEST(LogBeta, RejectsNonPositiveShapes) {
  EXPECT_THROW(log_beta(0.0, 1.0), DomainError);
  EXPECT_THROW(log_beta(1.0, -2.0), DomainError);
}

TEST(IncompleteBeta, EndpointsAreExact) {
  const auto zero = incomplete_beta(3.0, 5.0, 0.0);
  EXPECT_EQ(zero.lower, 0.0);
  EXPECT_EQ(zero.upper, 1.0);
  const auto one = incomplete_beta(3.0, 5.0, 1.0);
  EXPECT_EQ(one.lower, 1.0);
  EXPECT_EQ(one.upper, 0.0);
}

TEST(IncompleteBeta, ClosedFormSpecialCases) {
  for (double x : {0.01, 0.3, 0.5, 0.77, 0.99}) {
    EXPECT_NEAR(regularized_incomplete_beta(1.0, 1.0, x), x, 1e-15);
    EXPECT_NEAR(regularized_incomplete_beta(7.0, 1.0, x), std::pow(x, 7), 1e-14);
    EXPECT_NEAR(regularized_incomplete_beta(1.0, 5.0, x), 1.0 - std::pow(1.0 - x, 5), 1e-14);
  }
}

TEST(IncompleteBeta, MatchesBinomialTailForIntegerShapes) {
  for (int a = 1; a <= 40; a += 3) {
    for (int b = 1; b <= 40; b += 4) {
      for (double x : {0.05, 0.25, 0.5, 0.6, 0.95}) {
        EXPECT_NEAR(regularized_incomplete_beta(a, b, x), binomial_tail_reference(a, b, x), 1e-13)
            << a << "," << b << "," << x;
      }
    }
  }
}

TEST(IncompleteBeta, LargeShapesMatchHighPrecisionValues) {
  // Reference values from 40-digit evaluation of the exact binomial sum and
  // of x^(n+1) at the same double inputs.
  EXPECT_NEAR(regularized_incomplete_beta(4.0, 999998.0, 0.000004), 0.56653105183580797, 1e-14);
  EXPECT_NEAR(regularized_incomplete_beta(1000001.0, 1.0, 0.999999), 0.36787888934180924, 1e-14);
}

TEST(IncompleteBeta, TailsAreComplementary) {
  const auto t = incomplete_beta(12.0, 30.0, 0.4);
  EXPECT_NEAR(t.lower + t.upper, 1.0, 1e-15);
}

TEST(IncompleteBeta, RejectsBadArguments) {
  EXPECT_THROW(incomplete_beta(0.0, 1.0, 0.5), DomainError);
  EXPECT_THROW(incomplete_beta(1.0, 1.0, -0.1), DomainError);
  EXPECT_THROW(incomplete_beta(1.0, 1.0, 1.5), DomainError);
  EXPECT_THROW(incomplete_beta(1.0, 1.0, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

}  // namespace
}  // namespace induction::special

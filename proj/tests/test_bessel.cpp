#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "isingquench/bessel.hpp"
#include "isingquench/lemma_checks.hpp"

using namespace isingquench;

namespace {

// Independent oracle: ascending series with 30 terms, in long double.
double series_oracle(int n, double z) {
  long double half = z / 2.0L;
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= half / k;
  long double sum = 0.0L;
  for (int m = 0; m <= 30; ++m) {
    sum += term;
    term *= -(half * half) / ((m + 1.0L) * (m + 1.0L + n));
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST(BesselRow, ZeroArgument) {
  const BesselRow row = bessel_j_row(0.0, 5);
  ASSERT_EQ(row.values.size(), 6u);
  EXPECT_EQ(row(0), 1.0);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(row(n), 0.0);
}

TEST(BesselRow, FrozenValues) {
  // mpmath, 30 digits
  EXPECT_NEAR(bessel_j_row(2.0, 1)(1), 0.576724807756873387, 1e-12);
  EXPECT_NEAR(bessel_j(2, 4.0), 0.364128145852072804, 1e-12);
  EXPECT_NEAR(bessel_j(5, 6.0), 0.362087074887172389, 1e-12);
  EXPECT_NEAR(bessel_j_row(2.0, 1)(1), series_oracle(1, 2.0), 1e-12);
}

TEST(BesselRow, MatchesSeriesOracleForModerateArguments) {
  for (double z : {0.05, 0.3, 0.99, 1.0, 1.7, 3.0, 5.5}) {
    const BesselRow row = bessel_j_row(z, 20);
    for (int n = 0; n <= 20; ++n) {
      EXPECT_NEAR(row(n), series_oracle(n, z), 1e-12) << "n=" << n << " z=" << z;
    }
  }
}

TEST(BesselRow, MatchesStdLibraryOnWideGrid) {
  for (double z = 0.0; z <= 100.0; z += 0.37) {
    const int n_max = static_cast<int>(std::ceil(z)) + 10;
    const BesselRow row = bessel_j_row(z, n_max);
    for (int n = 0; n <= n_max; ++n) {
      ASSERT_NEAR(row(n), std::cyl_bessel_j(static_cast<double>(n), z), 1e-12)
          << "n=" << n << " z=" << z;
    }
  }
}

TEST(BesselRow, NormalizationResidualOnGrid) {
  EXPECT_LE(normalization_residual(bessel_j_row(8.0, 40)), 1e-10);
  for (double z = 0.0; z <= 60.0; z += 0.25) {
    const int n_max = static_cast<int>(std::ceil(z)) + 40;
    EXPECT_LE(normalization_residual(bessel_j_row(z, n_max)), 1e-10) << "z=" << z;
  }
}

TEST(BesselRow, MagnitudeBounds) {
  for (double z = 0.0; z <= 60.0; z += 0.5) {
    const BesselRow row = bessel_j_row(z, 80);
    EXPECT_LE(std::abs(row(0)), 1.0);
    for (int n = 1; n <= 80; ++n) EXPECT_LE(std::abs(row(n)), 1.0 / std::sqrt(2.0));
  }
}

TEST(BesselRow, RecurrenceResidual) {
  for (double z = 0.5; z <= 50.0; z += 0.5) {
    const int n_top = static_cast<int>(z) + 10;
    const BesselRow row = bessel_j_row(z, n_top + 1);
    for (int n = 1; n <= n_top; ++n) {
      EXPECT_LE(std::abs(row(n - 1) + row(n + 1) - 2.0 * n / z * row(n)), 1e-9);
    }
  }
}

TEST(BesselRow, NegativeOrdersReflect) {
  const BesselRow row = bessel_j_row(3.3, 10);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(row(-n), (n % 2 ? -1.0 : 1.0) * row(n));
  }
  EXPECT_THROW(row(11), std::out_of_range);
}

TEST(BesselRow, RejectsBadArguments) {
  EXPECT_THROW(bessel_j_row(-1.0, 3), std::invalid_argument);
  EXPECT_THROW(bessel_j_row(std::nan(""), 3), std::invalid_argument);
  EXPECT_THROW(bessel_j_row(INFINITY, 3), std::invalid_argument);
  EXPECT_THROW(bessel_j_row(1.0, 0), std::invalid_argument);
}

TEST(WeightedCubicSum, Examples) {
  EXPECT_EQ(weighted_cubic_sum(0.0, 10), 0.0);
  EXPECT_NEAR(weighted_cubic_sum(2.0, 1), 0.332611503882202566, 1e-12);
  EXPECT_NEAR(weighted_cubic_sum(8.0, 64), 109.286894031325193, 1e-9);
  EXPECT_GE(weighted_cubic_sum(8.0, 64), lemma1_lower_bound(8.0));
}

TEST(Lemma1, ClosedForm) {
  constexpr double pi = std::numbers::pi;
  const double at_one = 2.0 / (3.0 * pi) - (4.0 - pi) / (4.0 * pi) - (3.0 * pi - 4.0) / (12.0 * pi);
  EXPECT_NEAR(lemma1_lower_bound(1.0), at_one, 1e-15);
  EXPECT_NEAR(lemma1_lower_bound(1.0), 0.0, 1e-15);
  EXPECT_NEAR(lemma1_lower_bound(8.0), 37.5919157299444601, 1e-11);
  EXPECT_GE(weighted_cubic_sum(1.0, 64), lemma1_lower_bound(1.0));
  EXPECT_THROW(lemma1_lower_bound(0.99), std::invalid_argument);
}

TEST(Lemma1, HoldsOnGrid) {
  for (int i = 10; i <= 500; ++i) {
    const double z = 0.1 * i;
    const int cutoff = static_cast<int>(std::ceil(z)) + 80;
    EXPECT_GE(weighted_cubic_sum(z, cutoff), lemma1_lower_bound(z)) << "z=" << z;
  }
}

TEST(Lemma2, ClosedForm) {
  EXPECT_EQ(lemma2_tail_bound(2, 0.0), 0.0);
  EXPECT_NEAR(lemma2_tail_bound(20, 8.0) / 1.65637656252454371e-8, 1.0, 1e-12);
  EXPECT_LE(weighted_cubic_sum_range(8.0, 21, 220), lemma2_tail_bound(20, 8.0));
  EXPECT_THROW(lemma2_tail_bound(20, 13.6), std::invalid_argument);
  EXPECT_THROW(lemma2_tail_bound(1, 0.1), std::invalid_argument);
}

TEST(Lemma2, HoldsOnGrid) {
  for (int K = 2; K <= 60; ++K) {
    const double z_max = std::numbers::e * K / 4.0;
    for (int i = 1; i <= 40; ++i) {
      const double z = z_max * i / 40.0;
      EXPECT_LE(weighted_cubic_sum_range(z, K + 1, K + 200), lemma2_tail_bound(K, z))
          << "K=" << K << " z=" << z;
    }
  }
}

TEST(Lemma3, ClosedFormAndGrid) {
  EXPECT_NEAR(lemma3_lower_bound(1.0), 2.0 / std::numbers::pi - 1.0, 1e-15);
  EXPECT_NEAR(lemma3_lower_bound(10.0), 0.0536619772367581341, 1e-15);
  EXPECT_THROW(lemma3_lower_bound(0.5), std::invalid_argument);
  for (int i = 10; i <= 1000; ++i) {
    const double z = 0.1 * i;
    const BesselRow row = bessel_j_row(z, 1);
    EXPECT_GE(row(0) * row(0) + row(1) * row(1), lemma3_lower_bound(z)) << "z=" << z;
  }
}

TEST(Lemma3, ApproachesAsymptote) {
  for (double z : {1e2, 1e3, 1e4}) {
    EXPECT_NEAR(lemma3_lower_bound(z) * std::numbers::pi * z / 2.0, 1.0, 2.0 / z);
  }
}

TEST(LemmaChecks, GridSizesAndOutcome) {
  const auto l1 = check_lemma1(5.0, 0.5, 80);
  ASSERT_EQ(l1.size(), 9u);
  EXPECT_EQ(l1.front().z, 1.0);
  EXPECT_EQ(l1.back().z, 5.0);
  EXPECT_EQ(l1.back().K, 85);
  const auto l2 = check_lemma2(4, 3, 50);
  EXPECT_EQ(l2.size(), 9u);
  EXPECT_NEAR(l2.back().z, std::numbers::e, 1e-15);
  const auto l3 = check_lemma3(2.0, 0.25);
  EXPECT_EQ(l3.size(), 5u);
  for (const auto* grid : {&l1, &l2, &l3})
    for (const LemmaCheck& c : *grid) EXPECT_TRUE(c.holds()) << c.lemma << " " << c.z;
}

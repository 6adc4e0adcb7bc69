#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "isingquench/ising_exact.hpp"

using namespace isingquench;

namespace {
// The analytic bounds fall below double precision for large N.
constexpr double kRoundoff = 1e-14;
}  // namespace

TEST(GammaInitial, SmallCases) {
  const CorrelationMatrix g1 = gamma_initial(1);
  Eigen::Matrix2d expect;
  expect << 0, -1, 1, 0;
  EXPECT_EQ(g1.entries(), Eigen::MatrixXd(expect));

  const CorrelationMatrix g3 = gamma_initial(3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(g3.entries()(k, k + 3), -1.0);
    EXPECT_EQ(g3.entries()(k + 3, k), 1.0);
  }
  EXPECT_EQ(g3.entries().cwiseAbs().sum(), 6.0);
  for (int n : {1, 4, 9}) {
    EXPECT_EQ(gamma_initial(n).purity_residual(), 0.0);
    EXPECT_EQ(gamma_initial(n).antisymmetry_residual(), 0.0);
  }
}

TEST(HamiltonianMatrix, TwoSitesByHand) {
  // (i/2)[(c0 - c1) c2 + (c1 - c0) c3]  ->  i h c_k c_l puts h at (k,l), -h at (l,k).
  Eigen::Matrix4d expect;
  expect << 0, 0, 0.5, -0.5,
            0, 0, -0.5, 0.5,
           -0.5, 0.5, 0, 0,
            0.5, -0.5, 0, 0;
  EXPECT_EQ(hamiltonian_matrix(2).entries, Eigen::MatrixXd(expect));
  for (int n : {2, 3, 8, 21}) {
    const Eigen::MatrixXd h = hamiltonian_matrix(n).entries;
    EXPECT_EQ((h + h.transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(HamiltonianMatrix, FourierBlocks) {
  using namespace std::complex_literals;
  const int N = 7;
  Eigen::MatrixXcd f(N, N);
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) f(k, l) = std::exp(2i * std::numbers::pi * double(k * l) / double(N)) / std::sqrt(double(N));
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
  big.topLeftCorner(N, N) = f;
  big.bottomRightCorner(N, N) = f;
  const Eigen::MatrixXcd hh = big * hamiltonian_matrix(N).entries.cast<std::complex<double>>() * big.adjoint();
  for (int k = 0; k < N; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / N;
    Eigen::Matrix2cd blk;
    blk << hh(k, k), hh(k, k + N), hh(k + N, k), hh(k + N, k + N);
    EXPECT_LE((blk - fourier_hamiltonian_block(phi)).cwiseAbs().maxCoeff(), 1e-13) << "k=" << k;
  }
  // Everything off the 2x2 mode blocks vanishes.
  for (int a = 0; a < 2 * N; ++a) {
    for (int b = 0; b < 2 * N; ++b) {
      if (a % N != b % N) {
        EXPECT_LE(std::abs(hh(a, b)), 1e-13);
      }
    }
  }
}

TEST(EvolveDirect, IdentityAtZeroAndPurity) {
  const CorrelationMatrix g0 = gamma_initial(9);
  const HamiltonianMatrix h = hamiltonian_matrix(9);
  EXPECT_LE((evolve_direct(g0, h, 0.0).entries() - g0.entries()).cwiseAbs().maxCoeff(), 1e-15);
  for (double t : {0.3, 1.0, 4.0, 10.0}) {
    const CorrelationMatrix g = evolve_direct(g0, h, t);
    EXPECT_LE(g.purity_residual(), 1e-10) << t;
    EXPECT_LE(g.antisymmetry_residual(), 1e-12) << t;
  }
  EXPECT_THROW(evolve_direct(gamma_initial(3), hamiltonian_matrix(4), 1.0), std::invalid_argument);
}

TEST(EvolveDirect, MatchesFourierPath) {
  for (int N : {5, 8, 21}) {
    for (double t : {0.5, 2.0, 3.7}) {
      const CorrelationMatrix direct =
          evolve_direct(gamma_initial(N), hamiltonian_matrix(N), t).reordered(Ordering::modewise);
      const CorrelationMatrix fourier = gamma_t_fourier(N, t, Limit::finite);
      EXPECT_LE((direct.entries() - fourier.entries()).cwiseAbs().maxCoeff(), 1e-9)
          << "N=" << N << " t=" << t;
    }
  }
}

TEST(ModeFunctions, FiniteAtTimeZero) {
  for (int n = -5; n <= 5; ++n) {
    EXPECT_NEAR(f_n_finite(n, 0.0, 11), 0.0, 1e-15);
    EXPECT_NEAR(g_n_finite(n, 0.0, 11), n == 0 ? 1.0 : 0.0, 1e-15);
  }
  const ModeBlock b0 = mode_block(0, 0.0, 11, Limit::finite);
  Eigen::Matrix2d g0;
  g0 << 0, -1, 1, 0;
  EXPECT_LE((b0.matrix() - g0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ModeFunctions, FiniteMatchDirectEntries) {
  const int N = 21;
  const double t = 2.0;
  const CorrelationMatrix direct =
      evolve_direct(gamma_initial(N), hamiltonian_matrix(N), t).reordered(Ordering::modewise);
  for (int n : {-3, -1, 0, 1, 2}) {
    const Eigen::Matrix2d blk = direct.site_block(0, ((n % N) + N) % N);
    EXPECT_NEAR(blk(0, 0), f_n_finite(n, t, N), 1e-9);
    EXPECT_NEAR(blk(0, 1), -g_n_finite(n, t, N), 1e-9);
    EXPECT_NEAR(blk(1, 0), g_n_finite(-n, t, N), 1e-9);
    EXPECT_NEAR(blk(1, 1), -f_n_finite(n, t, N), 1e-9);
  }
}

TEST(ModeFunctions, SpectralBlocksMatchClosedSums) {
  for (int N : {4, 7, 20}) {
    for (double t : {0.0, 1.1, 5.0}) {
      for (int n = -N; n <= N; ++n) {
        const Eigen::Matrix2d spectral = mode_block_spectral(n, t, N);
        EXPECT_LE((spectral - mode_block(n, t, N, Limit::finite).matrix()).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(ModeFunctions, ThermodynamicClosedForms) {
  EXPECT_EQ(f_n_infinite(0, 3.0), 0.0);
  EXPECT_NEAR(f_n_infinite(1, 2.0), -0.182064072926036402, 1e-12);
  EXPECT_NEAR(g_n_infinite(2, 3.0), 0.301739229072643658, 1e-12);
  EXPECT_NEAR(g_n_infinite(0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(g_n_infinite(0, 1e-6), 1.0, 1e-10);
  for (double t : {0.7, 2.5, 9.0}) {
    const double z = 2.0 * t;
    EXPECT_NEAR(g_n_infinite(-1, t), bessel_j(1, z) / z - 0.5, 1e-13);
    // f_{-n} = -f_n via the reflection identity.
    EXPECT_NEAR(f_n_infinite(-3, t), -f_n_infinite(3, t), 1e-14);
  }
}

TEST(ThermodynamicLimit, ErrorWithinQuadratureBound) {
  for (int N = 20; N <= 45; ++N) {
    for (double t = 4.0; t <= N / 5.0 + 1e-12; t += 0.25) {
      const double eps = quadrature_error_bound_simplified(N, t) + kRoundoff;
      for (int n = -N / 2; n <= N / 2; ++n) {
        ASSERT_LE(std::abs(f_n_finite(n, t, N) - f_n_infinite(n, t)), eps) << N << " " << t << " " << n;
        ASSERT_LE(std::abs(g_n_finite(n, t, N) - g_n_infinite(n, t)), eps) << N << " " << t << " " << n;
        ASSERT_LE(std::abs(f_n_finite(n, t, N) - f_n_infinite(n, t)),
                  quadrature_error_bound(n, t, N, 2.9) + kRoundoff);
      }
    }
  }
}

TEST(QuadratureErrorBound, PaperConstants) {
  EXPECT_LE(quadrature_error_bound(10, 4.0, 20, 2.9), 30.0 * std::exp(-11.0));
  EXPECT_NEAR(quadrature_error_bound_simplified(20, 4.0), 30.0 * std::exp(-11.0), 1e-18);
  for (int N = 5; N < 60; ++N) {
    EXPECT_LT(quadrature_error_bound(1, 4.0, N + 1, 2.9), quadrature_error_bound(1, 4.0, N, 2.9));
  }
  EXPECT_LE(std::abs(f_n_finite(1, 4.0, 41) - f_n_infinite(1, 4.0)), quadrature_error_bound(1, 4.0, 41, 2.9) + kRoundoff);
  EXPECT_THROW(quadrature_error_bound(1, 1.0, 10, 0.0), std::invalid_argument);
}

TEST(GammaTFourier, InitialStateIsReorderedGammaZero) {
  for (int N : {1, 4, 9}) {
    const CorrelationMatrix g = gamma_t_fourier(N, 0.0, Limit::finite);
    EXPECT_LE((g.entries() - gamma_initial(N).reordered(Ordering::modewise).entries()).cwiseAbs().maxCoeff(),
              1e-15);
  }
  EXPECT_THROW(gamma_t_fourier(0, 1.0, Limit::finite), std::invalid_argument);
}

TEST(GammaTFourier, FiniteVersusThermodynamic) {
  const int N = 41;
  const double t = 4.0;
  const double diff = (gamma_t_fourier(N, t, Limit::finite).entries() -
                       gamma_t_fourier(N, t, Limit::thermodynamic).entries())
                          .cwiseAbs()
                          .maxCoeff();
  EXPECT_LE(diff, quadrature_error_bound_simplified(N, t) + kRoundoff);
}

TEST(GammaTFourier, StructuralInvariants) {
  for (int N : {6, 21, 51}) {
    for (double t : {0.0, 1.0, 4.0, 10.0}) {
      const CorrelationMatrix g = gamma_t_fourier(N, t, Limit::finite);
      EXPECT_LE(g.purity_residual(), 1e-10);
      EXPECT_LE(g.antisymmetry_residual(), 1e-12);
      EXPECT_LE(g.toeplitz_residual(), 1e-12);
      EXPECT_LE(g.entries().cwiseAbs().maxCoeff(), 1.0 + 1e-12);
    }
  }
}

TEST(GammaTFourier, ThreadCountDoesNotChangeResult) {
  const Eigen::MatrixXd one = gamma_t_fourier(31, 3.3, Limit::finite, 1).entries();
  const Eigen::MatrixXd four = gamma_t_fourier(31, 3.3, Limit::finite, 4).entries();
  EXPECT_EQ(one, four);
}

TEST(CorrelationMatrix, ReorderRoundTripAndTags) {
  const CorrelationMatrix g = evolve_direct(gamma_initial(5), hamiltonian_matrix(5), 1.3);
  const CorrelationMatrix back = g.reordered(Ordering::modewise).reordered(Ordering::position_momentum);
  EXPECT_EQ(back.entries(), g.entries());
  EXPECT_THROW(g.site_block(0, 1), std::invalid_argument);
  EXPECT_THROW(CorrelationMatrix(2, Eigen::MatrixXd::Zero(3, 3), Ordering::modewise), std::invalid_argument);
}

TEST(CorrelationMatrix, CsvRoundTripProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> time(0.0, 6.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = size(rng);
    const double t = time(rng);
    const CorrelationMatrix g = gamma_t_fourier(N, t, Limit::finite);
    std::stringstream ss;
    write_csv(ss, g, t);
    const CorrelationMatrixRecord rec = read_csv(ss);
    EXPECT_EQ(rec.matrix.n_modes(), N);
    EXPECT_EQ(rec.matrix.ordering(), Ordering::modewise);
    EXPECT_EQ(rec.matrix.entries(), g.entries());
  }
  std::stringstream bad("nope\n");
  EXPECT_THROW(read_csv(bad), std::runtime_error);
}

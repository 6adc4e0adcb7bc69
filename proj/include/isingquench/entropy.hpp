#pragma once

// Block entropies of Gaussian fermionic states and the chain of lower
// bounds leading from the exact entropy to the Bessel-sum estimate.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isingquench/bessel.hpp"
#include "isingquench/bounds.hpp"
#include "isingquench/ising_exact.hpp"

namespace isingquench {

/// Normal-mode values lambda_j in [0, 1] of a 2L x 2L block, descending.
struct BlockSpectrum {
  std::vector<double> lambdas;

  std::size_t size() const { return lambdas.size(); }
};

inline constexpr double kSpectrumTolerance = 1e-8;

/// Leading 2L x 2L principal submatrix A of a modewise correlation matrix.
inline Eigen::MatrixXd block_submatrix(const CorrelationMatrix& gamma, int L) {
  if (gamma.ordering() != Ordering::modewise) {
    throw std::invalid_argument("block_submatrix: correlation matrix must be modewise");
  }
  if (L < 1 || L > gamma.n_modes()) {
    throw std::invalid_argument("block_submatrix: need 1 <= L <= N");
  }
  return gamma.entries().topLeftCorner(2 * L, 2 * L);
}

/// Off-diagonal block C between sites [0, L) and [L, N).
inline Eigen::MatrixXd off_block(const CorrelationMatrix& gamma, int L) {
  if (gamma.ordering() != Ordering::modewise) {
    throw std::invalid_argument("off_block: correlation matrix must be modewise");
  }
  if (L < 1 || L > gamma.n_modes()) {
    throw std::invalid_argument("off_block: need 1 <= L <= N");
  }
  const int n = gamma.n_modes();
  return gamma.entries().topRightCorner(2 * L, 2 * (n - L));
}

/// Canonical values of an antisymmetric matrix, from the nonnegative half
/// of the spectrum of the Hermitian matrix iA.
inline BlockSpectrum normal_modes(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() == 0) {
    throw std::invalid_argument("normal_modes: need a nonempty 2L x 2L matrix");
  }
  const double asym = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSpectrumTolerance) {
    throw std::invalid_argument("normal_modes: matrix is not antisymmetric (residual " +
                                std::to_string(asym) + ")");
  }
  const Eigen::Index dim = a.rows();
  const Eigen::Index L = dim / 2;
  const Eigen::MatrixXcd herm = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending, +/- pairs

  BlockSpectrum spec;
  spec.lambdas.reserve(static_cast<std::size_t>(L));
  for (Eigen::Index j = 0; j < L; ++j) {
    const double top = ev[dim - 1 - j];
    const double bottom = ev[j];
    if (std::abs(top + bottom) > kSpectrumTolerance) {
      throw std::logic_error("normal_modes: eigenvalues do not pair as +/- lambda");
    }
    double lambda = top;
    if (lambda > 1.0) {
      if (lambda - 1.0 > kSpectrumTolerance) {
        throw std::invalid_argument("normal_modes: lambda = " + std::to_string(lambda) +
                                    " exceeds 1; not a valid correlation matrix");
      }
      lambda = 1.0;
    }
    if (lambda < 0.0) lambda = 0.0;  // only possible within pairing tolerance
    spec.lambdas.push_back(lambda);
  }
  return spec;
}

/// h(x) = H((1+x)/2) in bits.
inline double binary_entropy_h(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("binary_entropy_h: x must lie in [0, 1]");
  }
  if (x == 1.0) return 0.0;
  if (x == 0.0) return 1.0;
  return shannon_binary(0.5 * (1.0 + x));
}

inline double block_entropy(const BlockSpectrum& spectrum) {
  double s = 0.0;
  for (double l : spectrum.lambdas) s += binary_entropy_h(l);
  return s;
}

/// sum_j log2[((1+l)/2)^a + ((1-l)/2)^a] / (1 - a).
inline double renyi_entropy(const BlockSpectrum& spectrum, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw std::invalid_argument("renyi_entropy: alpha must be positive, finite and != 1");
  }
  double s = 0.0;
  for (double l : spectrum.lambdas) {
    const double p = 0.5 * (1.0 + l);
    const double q = 0.5 * (1.0 - l);
    s += std::log2(std::pow(p, alpha) + std::pow(q, alpha)) / (1.0 - alpha);
  }
  return s;
}

inline double block_entropy(const CorrelationMatrix& gamma, int L) {
  return block_entropy(normal_modes(block_submatrix(gamma, L)));
}

/// Exact entropy and every intermediate lower bound, evaluated on one
/// correlation matrix. Entropy-valued fields are in bits.
struct BoundChainReport {
  int N = 0;
  int L = 0;
  double t = 0.0;

  double s_exact = 0.0;
  double parabola_bound = 0.0;  // L + tr[A^2]/2 = sum_j (1 - lambda_j^2)
  double c_norm_bound = 0.0;    // ||C||_2^2 / 2
  double corner_bound = 0.0;    // sum_{n=-L..L} |n| ||gamma_n||_2^2 / 2
  std::optional<double> bessel_bound;   // sum_{k<=2L} k^3 J_k(2t)^2/(2t)^2 - 0.14
  std::optional<double> theorem_bound;  // (4/3pi) t - ln(t)/2 - 1
  std::string hypothesis_violation;     // empty when the theorem's hypotheses hold

  // Diagnostics.
  double dropped_mass = 0.0;       // c_norm_bound - corner_bound
  double thermo_corner = 0.0;      // sum_n |n| A_n / 2 from the N -> inf blocks
  double bessel_sum_form = 0.0;    // sum_{k<=2L} k^3 J_k(2t)^2/(2t)^2 - J_1(2t)/(2t) + 1/4
  double error_budget = 0.0;       // sum_n |n| B_n / 2 with eps = 30 e^{-1.45N+4.5t}
  double error_budget_closed = 0.0;  // eps (2 sqrt2/3 L(L+1)(2L+1)/t + 1)

  bool hypotheses_hold() const { return hypothesis_violation.empty(); }

  /// s_exact - theorem_bound, when the theorem applies.
  std::optional<double> theorem_margin() const {
    if (!theorem_bound) return std::nullopt;
    return s_exact - *theorem_bound;
  }
};

/// Sum_{k=1}^{2L} k^3 J_k(2t)^2 / (2t)^2.
inline double bessel_corner_sum(int L, double t) {
  if (t <= 0.0) return 0.0;
  const double z = 2.0 * t;
  return weighted_cubic_sum(z, 2 * L) / (z * z);
}

inline BoundChainReport bound_chain(const CorrelationMatrix& gamma, int L, double t) {
  if (gamma.ordering() != Ordering::modewise) {
    throw std::invalid_argument("bound_chain: correlation matrix must be modewise");
  }
  const int N = gamma.n_modes();
  if (L < 1 || 2 * L > N) {
    throw std::invalid_argument("bound_chain: need 1 <= L <= N/2");
  }
  BoundChainReport r;
  r.N = N;
  r.L = L;
  r.t = t;

  const Eigen::MatrixXd a = block_submatrix(gamma, L);
  r.s_exact = block_entropy(normal_modes(a));
  r.parabola_bound = L - 0.5 * a.squaredNorm();  // tr[A^2] = -||A||_F^2
  r.c_norm_bound = 0.5 * off_block(gamma, L).squaredNorm();

  // On an even ring with L = N/2 the offsets +L and -L are the same pairs.
  auto multiplicity = [&](int n) { return 2 * n == N ? 0.5 : 1.0; };
  double corner = 0.0;
  for (int n = 1; n <= L; ++n) {
    corner += multiplicity(n) * n *
              (gamma.site_block(0, n).squaredNorm() + gamma.site_block(0, N - n).squaredNorm());
  }
  r.corner_bound = 0.5 * corner;
  r.dropped_mass = r.c_norm_bound - r.corner_bound;

  const double eps = quadrature_error_bound_simplified(N, t);
  double thermo = 0.0;
  double budget = 0.0;
  for (int n = 1; n <= L; ++n) {
    for (int signed_n : {n, -n}) {
      const ModeBlock b = mode_block(signed_n, t, N, Limit::thermodynamic);
      const double a_n = 2.0 * b.f * b.f + b.g_plus * b.g_plus + b.g_minus * b.g_minus;
      const double b_n =
          2.0 * eps * (2.0 * std::abs(b.f) + std::abs(b.g_plus) + std::abs(b.g_minus));
      thermo += multiplicity(n) * n * a_n;
      budget += multiplicity(n) * n * b_n;
    }
  }
  r.thermo_corner = 0.5 * thermo;
  r.bessel_sum_form =
      bessel_corner_sum(L, t) - detail::bessel_over_arg(bessel_j_row(2.0 * t, 1), 1, t) + 0.25;
  r.error_budget = 0.5 * budget;
  if (t > 0.0) {
    r.error_budget_closed =
        eps * (2.0 * std::sqrt(2.0) / 3.0 * L * (L + 1.0) * (2.0 * L + 1.0) / t + 1.0);
  }

  r.hypothesis_violation = TheoremHypotheses{N, L, t}.violation();
  if (r.hypotheses_hold()) {
    r.bessel_bound = bessel_corner_sum(L, t) - 0.14;
    r.theorem_bound = theorem1_bound(t);
  }
  return r;
}

}  // namespace isingquench

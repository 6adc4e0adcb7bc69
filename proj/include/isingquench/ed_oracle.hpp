#pragma once

// Brute-force state-vector oracle for the spin chain
//   H = -1/2 sum_j [ X_j X_{j+1} + Z_j ].
//
// Basis convention: basis index b has site 0 as its most significant bit.
// Bit value 1 is the state |1>, with Z|1> = -|1> (Z = diag(1, -1)). With the
// Majoranas c_j = Z..Z X_j, c_{j+N} = Z..Z Y_j this is the convention in
// which |1..1> = prod_k (1 + i c_k c_{k+N})/2 reproduces Gamma_0 and lies in
// the parity -1 sector for odd N.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "isingquench/bounds.hpp"
#include "isingquench/ising_exact.hpp"

namespace isingquench {

using cplx = std::complex<double>;

enum class Boundary { periodic, open };

struct StateVector {
  int N = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

inline constexpr int kMaxOracleSites = 14;
inline constexpr int kMaxCorrelationSites = 12;

namespace detail {

inline void check_oracle_size(int N, int limit, const char* who) {
  if (N < 1 || N > limit) {
    throw std::invalid_argument(std::string(who) + ": N must lie in [1, " +
                                std::to_string(limit) + "]");
  }
}

inline std::uint32_t site_bit(int N, int j) { return 1u << (N - 1 - j); }

}  // namespace detail

/// |1..1>: every site in the Z = -1 state.
inline StateVector all_ones_state(int N) {
  detail::check_oracle_size(N, kMaxOracleSites, "all_ones_state");
  StateVector s{N, Eigen::VectorXcd::Zero(Eigen::Index{1} << N)};
  s.amplitudes[(Eigen::Index{1} << N) - 1] = 1.0;
  return s;
}

/// Dense 2^N x 2^N matrix of the spin Hamiltonian.
inline Eigen::MatrixXd build_spin_hamiltonian(int N, Boundary boundary) {
  detail::check_oracle_size(N, kMaxOracleSites, "build_spin_hamiltonian");
  const std::uint32_t dim = 1u << N;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const int bonds = boundary == Boundary::periodic ? N : N - 1;
  for (std::uint32_t b = 0; b < dim; ++b) {
    const int ones = std::popcount(b);
    h(b, b) += -0.5 * ((N - ones) - ones);
    for (int j = 0; j < bonds; ++j) {
      const int k = (j + 1) % N;
      const std::uint32_t flipped = b ^ detail::site_bit(N, j) ^ detail::site_bit(N, k);
      h(flipped, b) += -0.5;
    }
  }
  return h;
}

/// Reusable e^{-iHt} from one symmetric eigendecomposition.
class SpinEvolver {
 public:
  explicit SpinEvolver(const Eigen::MatrixXd& h) : solver_(h) {
    if (solver_.info() != Eigen::Success) {
      throw std::runtime_error("SpinEvolver: eigendecomposition failed");
    }
  }

  Eigen::Index dim() const { return solver_.eigenvalues().size(); }

  StateVector evolve(const StateVector& psi0, double t) const {
    if (psi0.amplitudes.size() != dim()) {
      throw std::invalid_argument("SpinEvolver::evolve: dimension mismatch");
    }
    const Eigen::MatrixXd& v = solver_.eigenvectors();
    Eigen::VectorXcd coeff = v.transpose() * psi0.amplitudes;
    const Eigen::VectorXd& e = solver_.eigenvalues();
    for (Eigen::Index i = 0; i < coeff.size(); ++i) {
      coeff[i] *= std::exp(cplx(0.0, -e[i] * t));
    }
    return {psi0.N, v * coeff};
  }

 private:
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
};

inline StateVector evolve_state(const StateVector& psi0, const Eigen::MatrixXd& h, double t) {
  if (h.rows() != psi0.amplitudes.size() || h.cols() != psi0.amplitudes.size()) {
    throw std::invalid_argument("evolve_state: dimension mismatch");
  }
  return SpinEvolver(h).evolve(psi0, t);
}

inline double energy_expectation(const StateVector& psi, const Eigen::MatrixXd& h) {
  return psi.amplitudes.dot(h * psi.amplitudes).real();
}

/// Von Neumann entropy in bits of a probability vector.
inline double shannon_entropy_bits(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) s -= p[i] * std::log2(p[i]);
  }
  return s;
}

/// S(rho_L) for the first L sites, from the Schmidt values of the
/// 2^L x 2^{N-L} reshaping.
inline double reduced_entropy(const StateVector& psi, int L) {
  if (L < 1 || L >= psi.N) throw std::invalid_argument("reduced_entropy: need 1 <= L < N");
  const Eigen::Index rows = Eigen::Index{1} << L;
  const Eigen::Index cols = Eigen::Index{1} << (psi.N - L);
  const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      psi.amplitudes.data(), rows, cols);
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  Eigen::VectorXd p = svd.singularValues().array().square();
  p /= p.sum();
  return shannon_entropy_bits(p);
}

/// The 2N Majorana operators c_0..c_{2N-1} as sparse signed permutations.
inline std::vector<Eigen::SparseMatrix<cplx>> majorana_operators(int N) {
  detail::check_oracle_size(N, kMaxCorrelationSites, "majorana_operators");
  const std::uint32_t dim = 1u << N;
  std::vector<Eigen::SparseMatrix<cplx>> ops;
  ops.reserve(static_cast<std::size_t>(2 * N));
  for (int kind = 0; kind < 2; ++kind) {  // 0: X-type, 1: Y-type
    for (int n = 0; n < N; ++n) {
      std::vector<Eigen::Triplet<cplx>> trip;
      trip.reserve(dim);
      const std::uint32_t bit = detail::site_bit(N, n);
      const std::uint32_t string_mask = ~((bit << 1) - 1) & (dim - 1);  // sites < n
      for (std::uint32_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(b & string_mask) % 2 == 0) ? 1.0 : -1.0;
        cplx amp = sign;
        if (kind == 1) amp *= (b & bit) ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
        trip.emplace_back(static_cast<int>(b ^ bit), static_cast<int>(b), amp);
      }
      Eigen::SparseMatrix<cplx> c(dim, dim);
      c.setFromTriplets(trip.begin(), trip.end());
      ops.push_back(std::move(c));
    }
  }
  return ops;
}

/// Gamma_kl = -(i/2) <psi|[c_k, c_l]|psi> in position-momentum ordering.
inline CorrelationMatrix jw_correlation_matrix(const StateVector& psi) {
  detail::check_oracle_size(psi.N, kMaxCorrelationSites, "jw_correlation_matrix");
  const int N = psi.N;
  const auto ops = majorana_operators(N);
  std::vector<Eigen::VectorXcd> images;
  images.reserve(ops.size());
  for (const auto& c : ops) images.emplace_back(c * psi.amplitudes);

  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int k = 0; k < 2 * N; ++k) {
    for (int l = k + 1; l < 2 * N; ++l) {
      // [c_k, c_l] = 2 c_k c_l for k != l, and <psi|c_k c_l|psi> = <c_k psi, c_l psi>.
      const cplx v = cplx(0.0, -1.0) * images[k].dot(images[l]);
      if (std::abs(v.imag()) > 1e-10) {
        throw std::logic_error("jw_correlation_matrix: imaginary residual " +
                               std::to_string(v.imag()) + " exceeds 1e-10");
      }
      g(k, l) = v.real();
      g(l, k) = -v.real();
    }
  }
  return CorrelationMatrix(N, std::move(g), Ordering::position_momentum);
}

/// <psi| Z_0 Z_1 ... Z_{N-1} |psi>.
inline double parity_expectation(const StateVector& psi) {
  double s = 0.0;
  for (Eigen::Index b = 0; b < psi.amplitudes.size(); ++b) {
    const double w = std::norm(psi.amplitudes[b]);
    s += (std::popcount(static_cast<std::uint64_t>(b)) % 2 == 0) ? w : -w;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Density matrices: random sampling, partial traces, trace norms.

/// Haar-random pure state on n qubits.
template <class Rng>
Eigen::VectorXcd random_pure_state(int n_qubits, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx(gauss(rng), gauss(rng));
  return v / v.norm();
}

/// rho on the first L of n qubits (most significant first).
inline Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi, int n_qubits, int L) {
  if (L < 1 || L > n_qubits || psi.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("reduced_density_matrix: bad dimensions");
  }
  const Eigen::Index rows = Eigen::Index{1} << L;
  const Eigen::Index cols = Eigen::Index{1} << (n_qubits - L);
  const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      psi.data(), rows, cols);
  return m * m.adjoint();
}

inline double von_neumann_entropy_bits(const Eigen::MatrixXcd& rho) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  return shannon_entropy_bits(es.eigenvalues().cwiseMax(0.0));
}

/// ||X||_1 for Hermitian X.
inline double trace_norm(const Eigen::MatrixXcd& x) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

/// || |a><a| - |b><b| ||_1 = 2 sqrt(1 - |<a|b>|^2) for unit vectors.
inline double pure_state_trace_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  // 1 - |<a|b>|^2 as the squared norm of b's component orthogonal to a,
  // which keeps precision for nearly equal states.
  const Eigen::VectorXcd perp = b - a * a.dot(b);
  return 2.0 * std::min(1.0, perp.norm());
}

struct ContinuitySample {
  int L = 0;
  double global_distance = 0.0;   // || psi psi^+ - phi phi^+ ||_1
  double reduced_distance = 0.0;  // || rho_L - sigma_L ||_1
  double entropy_gap = 0.0;       // |S(rho_L) - S(sigma_L)|
  AudenaertBound bound;           // at T = reduced_distance / 2

  bool contraction_holds(double tol = 1e-12) const {
    return reduced_distance <= global_distance + tol;
  }
  bool audenaert_holds(double tol = 1e-12) const { return entropy_gap <= bound.exact + tol; }
};

/// One random pair of purified states on L + L qubits. The second state is
/// the first perturbed by a random direction of random strength, so that the
/// sample covers trace distances from near 0 to near 2.
template <class Rng>
ContinuitySample sample_continuity_pair(int L, Rng& rng) {
  const int n = 2 * L;
  const Eigen::VectorXcd psi = random_pure_state(n, rng);
  std::uniform_real_distribution<double> strength(0.0, 1.0);
  const double s = strength(rng);
  const double delta = s * s * s * 4.0;
  Eigen::VectorXcd phi = psi + delta * random_pure_state(n, rng);
  phi /= phi.norm();

  const Eigen::MatrixXcd rho = reduced_density_matrix(psi, n, L);
  const Eigen::MatrixXcd sigma = reduced_density_matrix(phi, n, L);
  ContinuitySample out;
  out.L = L;
  out.global_distance = pure_state_trace_distance(psi, phi);
  out.reduced_distance = trace_norm(rho - sigma);
  out.entropy_gap = std::abs(von_neumann_entropy_bits(rho) - von_neumann_entropy_bits(sigma));
  out.bound = audenaert_bound(std::min(1.0, 0.5 * out.reduced_distance), L);
  return out;
}

}  // namespace isingquench

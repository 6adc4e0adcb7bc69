#pragma once

// Majorana correlation matrix of the transverse-field Ising chain
//   H = -1/2 sum_j [ X_j X_{j+1} + Z_j ]   (periodic, N sites)
// quenched from the all-|1> product state.
//
// Conventions used throughout:
//   * sites are 0-based, j = 0..N-1;
//   * Majoranas c_j = Z_0..Z_{j-1} X_j and c_{j+N} = Z_0..Z_{j-1} Y_j;
//   * position-momentum ordering: index j for c_j and j+N for c_{j+N};
//   * modewise ordering: index 2j for c_j and 2j+1 for c_{j+N};
//   * the fermionic Hamiltonian matrix H is defined by
//       H_spin = (i/4) sum_{kl} H_kl [c_k, c_l],
//     and the evolution parameter t is the one of Gamma_t = e^{-Ht} Gamma_0 e^{Ht}.
//
// With this normalization the spin state e^{-i H_spin tau}|1..1> has
// correlation matrix Gamma_t at t = -2 tau; see spin_time_for(). Entropies
// depend only on |tau|.
//
// For even N the same formulas describe the Ising ring with a flipped
// coupling across the boundary (the other parity sector).

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "isingquench/bessel.hpp"
#include "isingquench/parallel.hpp"

namespace isingquench {

enum class Ordering { position_momentum, modewise };

inline const char* to_string(Ordering o) {
  return o == Ordering::modewise ? "modewise" : "position-momentum";
}

inline Ordering ordering_from_string(const std::string& s) {
  if (s == "modewise") return Ordering::modewise;
  if (s == "position-momentum") return Ordering::position_momentum;
  throw std::invalid_argument("unknown ordering tag '" + s + "'");
}

/// Spin-chain time tau whose state reproduces Gamma_t.
inline double spin_time_for(double t) { return -0.5 * t; }

/// Evolution parameter t whose Gamma_t has the entropies of spin time tau.
inline double fermion_time_for(double tau) { return 2.0 * std::abs(tau); }

/// Real antisymmetric 2N x 2N matrix Gamma_kl = -(i/2) tr(rho [c_k, c_l]).
class CorrelationMatrix {
 public:
  CorrelationMatrix(int n_modes, Eigen::MatrixXd entries, Ordering ordering)
      : n_modes_(n_modes), entries_(std::move(entries)), ordering_(ordering) {
    if (n_modes_ < 1) throw std::invalid_argument("CorrelationMatrix: n_modes must be >= 1");
    if (entries_.rows() != 2 * n_modes_ || entries_.cols() != 2 * n_modes_) {
      throw std::invalid_argument("CorrelationMatrix: entries must be 2N x 2N");
    }
  }

  int n_modes() const { return n_modes_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  Ordering ordering() const { return ordering_; }

  /// Index of Majorana `k` (position-momentum label) in ordering `o`.
  static int index_in(Ordering o, int k, int n_modes) {
    if (o == Ordering::position_momentum) return k;
    return k < n_modes ? 2 * k : 2 * (k - n_modes) + 1;
  }

  CorrelationMatrix reordered(Ordering target) const {
    if (target == ordering_) return *this;
    const int dim = 2 * n_modes_;
    Eigen::VectorXi perm(dim);  // perm[position-momentum k] = index in source
    for (int k = 0; k < dim; ++k) perm[k] = index_in(ordering_, k, n_modes_);
    Eigen::MatrixXd out(dim, dim);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        out(index_in(target, a, n_modes_), index_in(target, b, n_modes_)) =
            entries_(perm[a], perm[b]);
      }
    }
    return CorrelationMatrix(n_modes_, std::move(out), target);
  }

  /// 2x2 block coupling sites j and k; requires modewise ordering.
  Eigen::Matrix2d site_block(int j, int k) const {
    require_modewise("site_block");
    return entries_.block<2, 2>(2 * j, 2 * k);
  }

  double antisymmetry_residual() const {
    return (entries_ + entries_.transpose()).cwiseAbs().maxCoeff();
  }

  /// max |(Gamma^2 + 1)_kl|; zero for pure Gaussian states.
  double purity_residual() const {
    const Eigen::MatrixXd sq = entries_ * entries_;
    return (sq + Eigen::MatrixXd::Identity(sq.rows(), sq.cols())).cwiseAbs().maxCoeff();
  }

  /// max over site pairs of |block(j,k) - block(0, (k-j) mod N)|.
  double toeplitz_residual() const {
    require_modewise("toeplitz_residual");
    double r = 0.0;
    for (int j = 0; j < n_modes_; ++j) {
      for (int k = 0; k < n_modes_; ++k) {
        const int d = ((k - j) % n_modes_ + n_modes_) % n_modes_;
        r = std::max(r, (site_block(j, k) - site_block(0, d)).cwiseAbs().maxCoeff());
      }
    }
    return r;
  }

 private:
  void require_modewise(const char* who) const {
    if (ordering_ != Ordering::modewise) {
      throw std::invalid_argument(std::string(who) + ": correlation matrix must be modewise");
    }
  }

  int n_modes_;
  Eigen::MatrixXd entries_;
  Ordering ordering_;
};

/// gamma_n = [[f_n, -g_n], [g_{-n}, -f_n]].
struct ModeBlock {
  int n = 0;
  double f = 0.0;
  double g_plus = 0.0;   // g_n
  double g_minus = 0.0;  // g_{-n}

  Eigen::Matrix2d matrix() const {
    Eigen::Matrix2d m;
    m << f, -g_plus, g_minus, -f;
    return m;
  }
};

/// Real antisymmetric H with H_spin = (i/4) sum H_kl [c_k, c_l].
struct HamiltonianMatrix {
  int n_modes = 0;
  Eigen::MatrixXd entries;
};

enum class Limit { finite, thermodynamic };

inline CorrelationMatrix gamma_initial(int N) {
  if (N < 1) throw std::invalid_argument("gamma_initial: N must be >= 1");
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  g.topRightCorner(N, N) = -Eigen::MatrixXd::Identity(N, N);
  g.bottomLeftCorner(N, N) = Eigen::MatrixXd::Identity(N, N);
  return CorrelationMatrix(N, std::move(g), Ordering::position_momentum);
}

/// (i/2) sum_j (c_j - c_{j+1 mod N}) c_{j+N}; each i*h c_k c_l term puts
/// h at (k,l) and -h at (l,k).
inline HamiltonianMatrix hamiltonian_matrix(int N) {
  if (N < 2) throw std::invalid_argument("hamiltonian_matrix: N must be >= 2");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int j = 0; j < N; ++j) {
    const int next = (j + 1) % N;
    h(j, j + N) += 0.5;
    h(j + N, j) -= 0.5;
    h(next, j + N) -= 0.5;
    h(j + N, next) += 0.5;
  }
  return {N, std::move(h)};
}

/// Gamma_t = e^{-Ht} Gamma_0 e^{Ht} by a dense matrix exponential (Pade
/// scaling and squaring). Result keeps Gamma_0's ordering.
inline CorrelationMatrix evolve_direct(const CorrelationMatrix& gamma0, const HamiltonianMatrix& h,
                                       double t) {
  if (h.entries.rows() != gamma0.entries().rows() || h.entries.cols() != gamma0.entries().cols()) {
    throw std::invalid_argument("evolve_direct: dimension mismatch");
  }
  if (gamma0.ordering() != Ordering::position_momentum) {
    return evolve_direct(gamma0.reordered(Ordering::position_momentum), h, t)
        .reordered(gamma0.ordering());
  }
  const Eigen::MatrixXd r = (-t * h.entries).exp();
  Eigen::MatrixXd g = r * gamma0.entries() * r.transpose();
  return CorrelationMatrix(gamma0.n_modes(), std::move(g), Ordering::position_momentum);
}

namespace detail {

inline double phi_k(int k, int N) { return 2.0 * std::numbers::pi * k / N; }

inline double take_real(std::complex<double> v, const char* who) {
  if (std::abs(v.imag()) > 1e-10) {
    throw std::logic_error(std::string(who) + ": imaginary residual " +
                           std::to_string(v.imag()) + " exceeds 1e-10");
  }
  return v.real();
}

}  // namespace detail

/// Finite-N discrete Fourier sum for f_n.
inline double f_n_finite(int n, double t, int N) {
  if (N < 1) throw std::invalid_argument("f_n_finite: N must be >= 1");
  using namespace std::complex_literals;
  std::complex<double> s = 0.0;
  for (int k = 0; k < N; ++k) {
    const double phi = detail::phi_k(k, N);
    s += 0.5i * std::exp(1i * (n * phi)) * (std::exp(-0.5i * phi) + std::exp(0.5i * phi)) *
         std::sin(2.0 * t * std::sin(0.5 * phi));
  }
  return detail::take_real(s / static_cast<double>(N), "f_n_finite");
}

/// Finite-N discrete Fourier sum for g_n.
inline double g_n_finite(int n, double t, int N) {
  if (N < 1) throw std::invalid_argument("g_n_finite: N must be >= 1");
  using namespace std::complex_literals;
  std::complex<double> s = 0.0;
  for (int k = 0; k < N; ++k) {
    const double phi = detail::phi_k(k, N);
    const std::complex<double> e = std::exp(1i * phi);
    s += 0.5 * std::exp(1i * (n * phi)) *
         (1.0 - e + (1.0 + e) * std::cos(2.0 * t * std::sin(0.5 * phi)));
  }
  return detail::take_real(s / static_cast<double>(N), "g_n_finite");
}

namespace detail {

// J_m(2t)/(2t) with the t -> 0 limit.
inline double bessel_over_arg(const BesselRow& row, int m, double t) {
  if (t == 0.0) {
    const int a = m < 0 ? -m : m;
    if (a != 1) return 0.0;
    return m < 0 ? -0.5 : 0.5;
  }
  return row(m) / (2.0 * t);
}

inline BesselRow row_for(int max_abs_order, double t) {
  return bessel_j_row(2.0 * t, std::max(max_abs_order, 1));
}

inline double f_inf(int n, double t, const BesselRow& row) {
  if (n == 0) return 0.0;
  return -2.0 * n * bessel_over_arg(row, 2 * n, t);
}

inline double i_offset(int n) {
  if (n == 0) return 0.5;
  if (n == -1) return -0.5;
  return 0.0;
}

inline double g_inf(int n, double t, const BesselRow& row) {
  return (2.0 * n + 1.0) * bessel_over_arg(row, 2 * n + 1, t) + i_offset(n);
}

}  // namespace detail

/// Thermodynamic limit f_n = -2n J_{2n}(2t) / (2t).
inline double f_n_infinite(int n, double t) {
  if (t < 0.0) throw std::invalid_argument("f_n_infinite: t must be >= 0");
  return detail::f_inf(n, t, detail::row_for(2 * std::abs(n), t));
}

/// Thermodynamic limit g_n = (2n+1) J_{2n+1}(2t) / (2t) + I_n.
inline double g_n_infinite(int n, double t) {
  if (t < 0.0) throw std::invalid_argument("g_n_infinite: t must be >= 0");
  return detail::g_inf(n, t, detail::row_for(std::abs(2 * n + 1), t));
}

inline ModeBlock mode_block(int n, double t, int N, Limit limit) {
  if (limit == Limit::finite) {
    return {n, f_n_finite(n, t, N), g_n_finite(n, t, N), g_n_finite(-n, t, N)};
  }
  const BesselRow row = detail::row_for(2 * std::abs(n) + 1, t);
  return {n, detail::f_inf(n, t, row), detail::g_inf(n, t, row), detail::g_inf(-n, t, row)};
}

/// Fourier-space Hamiltonian block 1/2 [[0, 1 - e^{i phi}], [-1 + e^{-i phi}, 0]].
inline Eigen::Matrix2cd fourier_hamiltonian_block(double phi) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd h;
  h << 0.0, 0.5 * (1.0 - std::exp(1i * phi)), 0.5 * (-1.0 + std::exp(-1i * phi)), 0.0;
  return h;
}

/// e^{-H(phi) t} Gamma_0(phi) e^{H(phi) t}, using H(phi)^2 = -sin^2(phi/2) 1.
inline Eigen::Matrix2cd fourier_gamma_block(double phi, double t) {
  const Eigen::Matrix2cd h = fourier_hamiltonian_block(phi);
  const double w = std::abs(std::sin(0.5 * phi));
  const double c = std::cos(w * t);
  const double s_over_w = w == 0.0 ? t : std::sin(w * t) / w;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd forward = c * id + s_over_w * h;   // e^{Ht}
  const Eigen::Matrix2cd backward = c * id - s_over_w * h;  // e^{-Ht}
  Eigen::Matrix2cd g0;
  g0 << 0.0, -1.0, 1.0, 0.0;
  return backward * g0 * forward;
}

/// gamma_n = (1/N) sum_k e^{i n phi_k} Gamma_t(phi_k) from the 2x2 blocks.
inline Eigen::Matrix2d mode_block_spectral(int n, double t, int N) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  for (int k = 0; k < N; ++k) {
    const double phi = detail::phi_k(k, N);
    s += std::exp(1i * (n * phi)) * fourier_gamma_block(phi, t);
  }
  s /= static_cast<double>(N);
  if (s.imag().cwiseAbs().maxCoeff() > 1e-10) {
    throw std::logic_error("mode_block_spectral: imaginary residual exceeds 1e-10");
  }
  return s.real();
}

/// Block-Toeplitz Gamma_t in modewise ordering; site block (j,k) = gamma_{k-j}
/// with offsets folded into (-N/2, N/2] (gamma_{N-n} = gamma_{-n}).
inline CorrelationMatrix gamma_t_fourier(int N, double t, Limit limit, unsigned threads = 1) {
  if (N < 1) throw std::invalid_argument("gamma_t_fourier: N must be >= 1");
  auto offset = [N](int d) { return 2 * d > N ? d - N : d; };
  const auto blocks = parallel_map(
      static_cast<std::size_t>(N),
      [&](std::size_t d) { return mode_block(offset(static_cast<int>(d)), t, N, limit).matrix(); },
      threads);
  Eigen::MatrixXd g(2 * N, 2 * N);
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      const int d = ((k - j) % N + N) % N;
      g.block<2, 2>(2 * j, 2 * k) = blocks[static_cast<std::size_t>(d)];
    }
  }
  return CorrelationMatrix(N, std::move(g), Ordering::modewise);
}

/// 2M/(e^{aN} - 1) with M = 1/4 e^{|n|a} (1+e^a) (3 + exp[t(e^{a/2}+e^{-a/2})]),
/// bounding |f_n - f_n^inf| and |g_n - g_n^inf|.
inline double quadrature_error_bound(int n, double t, int N, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("quadrature_error_bound: a must be > 0");
  if (N < 1) throw std::invalid_argument("quadrature_error_bound: N must be >= 1");
  const double m = 0.25 * std::exp(std::abs(n) * a) * (1.0 + std::exp(a)) *
                   (3.0 + std::exp(t * (std::exp(0.5 * a) + std::exp(-0.5 * a))));
  return 2.0 * m / std::expm1(a * N);
}

/// 30 e^{-1.45 N + 4.5 t}: the a = 2.9 bound simplified for |n| <= N/2,
/// t >= 4, N >= 20.
inline double quadrature_error_bound_simplified(int N, double t) {
  return 30.0 * std::exp(-1.45 * N + 4.5 * t);
}

/// Row-major CSV: header "N,t,ordering_tag", one metadata row, then 2N rows.
inline void write_csv(std::ostream& os, const CorrelationMatrix& g, double t) {
  os << "N,t,ordering_tag\n" << g.n_modes() << ',' << t << ',' << to_string(g.ordering()) << '\n';
  const Eigen::MatrixXd& e = g.entries();
  const auto old_precision = os.precision(17);
  for (Eigen::Index r = 0; r < e.rows(); ++r) {
    for (Eigen::Index c = 0; c < e.cols(); ++c) {
      if (c) os << ',';
      os << e(r, c);
    }
    os << '\n';
  }
  os.precision(old_precision);
}

struct CorrelationMatrixRecord {
  CorrelationMatrix matrix;
  double t;
};

inline CorrelationMatrixRecord read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "N,t,ordering_tag") {
    throw std::runtime_error("read_csv: missing header 'N,t,ordering_tag'");
  }
  std::getline(is, line);
  std::istringstream meta(line);
  std::string field;
  std::getline(meta, field, ',');
  const int n = std::stoi(field);
  std::getline(meta, field, ',');
  const double t = std::stod(field);
  std::getline(meta, field);
  const Ordering ordering = ordering_from_string(field);
  Eigen::MatrixXd e(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r) {
    if (!std::getline(is, line)) throw std::runtime_error("read_csv: truncated matrix");
    std::istringstream row(line);
    for (int c = 0; c < 2 * n; ++c) {
      if (!std::getline(row, field, ',')) throw std::runtime_error("read_csv: short row");
      e(r, c) = std::stod(field);
    }
  }
  return {CorrelationMatrix(n, std::move(e), ordering), t};
}

}  // namespace isingquench

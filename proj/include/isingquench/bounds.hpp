#pragma once

// Closed-form entropy and bond-dimension bounds.
//
// Entropies are in bits. The correction terms carrying ln t are natural
// logarithms and are kept that way; nothing here converts between the two.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace isingquench {

/// Shannon entropy in bits of the distribution (p, 1-p); 0 log 0 = 0.
inline double shannon_binary(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("shannon_binary: p must lie in [0, 1]");
  }
  double s = 0.0;
  if (p > 0.0) s -= p * std::log2(p);
  if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
  return s;
}

/// Parameter region in which the linear entropy lower bound is proven:
/// N >= 20, L >= 10, 4 <= t <= eL/4, t <= N/5.
struct TheoremHypotheses {
  int N = 0;
  int L = 0;
  double t = 0.0;

  bool holds() const { return violation().empty(); }

  /// Human-readable list of failed conditions, empty when all hold.
  std::string violation() const {
    std::ostringstream os;
    const char* sep = "";
    auto fail = [&](const char* msg) {
      os << sep << msg;
      sep = "; ";
    };
    if (N < 20) fail("N < 20");
    if (L < 10) fail("L < 10");
    if (t < 4.0) fail("t < 4");
    if (t > std::numbers::e * L / 4.0) fail("t > eL/4");
    if (t > N / 5.0) fail("t > N/5");
    return os.str();
  }
};

/// (4/(3 pi)) t - (1/2) ln t - 1.
inline double theorem1_bound(double t) {
  return 4.0 / (3.0 * std::numbers::pi) * t - 0.5 * std::log(t) - 1.0;
}

/// Accuracy threshold 2e/(3 pi) above which the bond-dimension bound loses
/// its linear growth.
inline constexpr double epsilon0 = 2.0 * std::numbers::e / (3.0 * std::numbers::pi);

struct AudenaertBound {
  double exact = 0.0;    // T log2(2^L - 1) + H(T, 1-T)
  double relaxed = 0.0;  // T L + 1
};

/// Continuity bound on |S(rho_L) - S(sigma_L)| for half trace distance T.
inline AudenaertBound audenaert_bound(double T, int L) {
  if (!(T >= 0.0 && T <= 1.0)) {
    throw std::invalid_argument("audenaert_bound: T must lie in [0, 1]");
  }
  if (L < 1) throw std::invalid_argument("audenaert_bound: L must be >= 1");
  // log2(2^L - 1) without overflow for large L.
  const double log_dim = L + std::log2(-std::expm1(-L * std::numbers::ln2));
  return {T * log_dim + shannon_binary(T), T * L + 1.0};
}

struct ApproxEntropyBound {
  double unoptimized = 0.0;  // (4/3pi) t - eps L / 2 - ln(t)/2 - 2
  double optimized = 0.0;    // (4/3pi - 2 eps/e) t - ln(t)/2 - 2, at L = 4t/e
  double optimal_L = 0.0;    // 4t/e
  bool optimized_applicable = false;  // t >= 5e/2
};

/// Lower bound on the block entropy of any state within trace distance
/// epsilon of the evolved state.
inline ApproxEntropyBound approx_entropy_lower_bound(double t, double epsilon, int L) {
  constexpr double pi = std::numbers::pi;
  constexpr double e = std::numbers::e;
  ApproxEntropyBound b;
  b.unoptimized = 4.0 / (3.0 * pi) * t - 0.5 * epsilon * L - 0.5 * std::log(t) - 2.0;
  b.optimized = (4.0 / (3.0 * pi) - 2.0 * epsilon / e) * t - 0.5 * std::log(t) - 2.0;
  b.optimal_L = 4.0 * t / e;
  b.optimized_applicable = t >= 2.5 * e;
  return b;
}

struct BondDimensionBound {
  double log2_D = 0.0;              // lower bound on log2 D
  double linear_coefficient = 0.0;  // 2/(3 pi) - eps/e
  long long min_D = 1;              // ceil(2^log2_D), at least 1
};

inline double bond_dim_linear_coefficient(double epsilon) {
  return 2.0 / (3.0 * std::numbers::pi) - epsilon / std::numbers::e;
}

/// log2 D >= (2/(3 pi) - eps/e) t - (1/4) ln t - 1.
inline BondDimensionBound bond_dim_lower_bound(double t, double epsilon) {
  BondDimensionBound b;
  b.linear_coefficient = bond_dim_linear_coefficient(epsilon);
  b.log2_D = b.linear_coefficient * t - 0.25 * std::log(t) - 1.0;
  if (b.log2_D > 62.0) {
    b.min_D = std::numeric_limits<long long>::max();
  } else {
    b.min_D = std::max(1LL, static_cast<long long>(std::ceil(std::exp2(b.log2_D))));
  }
  return b;
}

}  // namespace isingquench

#pragma once

// Grid checks of the three Bessel-function inequalities.

#include <cmath>
#include <numbers>
#include <vector>

#include "isingquench/bessel.hpp"

namespace isingquench {

struct LemmaCheck {
  int lemma = 0;
  int K = 0;  // tail start for lemma 2, partial-sum cutoff for lemma 1, 0 otherwise
  double z = 0.0;
  double value = 0.0;  // numerically evaluated side
  double bound = 0.0;  // closed-form side
  double margin = 0.0;  // positive when the inequality holds
  bool holds() const { return margin >= 0.0; }
};

/// sum_{n=1}^{ceil(z)+cutoff_offset} n^3 J_n(z)^2 >= lemma1_lower_bound(z)
/// for z = 1, 1+step, ..., z_max.
inline std::vector<LemmaCheck> check_lemma1(double z_max = 50.0, double step = 0.1,
                                            int cutoff_offset = 80) {
  std::vector<LemmaCheck> out;
  const int n = static_cast<int>(std::floor((z_max - 1.0) / step + 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double z = 1.0 + i * step;
    const int cutoff = static_cast<int>(std::ceil(z)) + cutoff_offset;
    LemmaCheck c{1, cutoff, z, weighted_cubic_sum(z, cutoff), lemma1_lower_bound(z), 0.0};
    c.margin = c.value - c.bound;
    out.push_back(c);
  }
  return out;
}

/// sum_{n=K+1}^{K+tail} n^3 J_n(z)^2 <= lemma2_tail_bound(K, z) at
/// z_points evenly spaced z in (0, eK/4], for K = 2..k_max.
inline std::vector<LemmaCheck> check_lemma2(int k_max = 60, int z_points = 40, int tail = 200) {
  std::vector<LemmaCheck> out;
  for (int K = 2; K <= k_max; ++K) {
    const double z_max = std::numbers::e * K / 4.0;
    for (int i = 1; i <= z_points; ++i) {
      const double z = z_max * i / z_points;
      LemmaCheck c{2, K, z, weighted_cubic_sum_range(z, K + 1, K + tail), lemma2_tail_bound(K, z), 0.0};
      c.margin = c.bound - c.value;
      out.push_back(c);
    }
  }
  return out;
}

/// J_0(z)^2 + J_1(z)^2 >= lemma3_lower_bound(z) for z = 1, 1+step, ..., z_max.
inline std::vector<LemmaCheck> check_lemma3(double z_max = 100.0, double step = 0.1) {
  std::vector<LemmaCheck> out;
  const int n = static_cast<int>(std::floor((z_max - 1.0) / step + 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double z = 1.0 + i * step;
    const BesselRow row = bessel_j_row(z, 1);
    LemmaCheck c{3, 0, z, row(0) * row(0) + row(1) * row(1), lemma3_lower_bound(z), 0.0};
    c.margin = c.value - c.bound;
    out.push_back(c);
  }
  return out;
}

}  // namespace isingquench

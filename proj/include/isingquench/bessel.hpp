#pragma once

// Bessel functions of the first kind on a row of integer orders, and the
// closed-form bounds on the weighted sums sum_n n^3 J_n(z)^2.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace isingquench {

/// J_0(z) .. J_{n_max}(z) for one real argument.
struct BesselRow {
  double z = 0.0;
  std::vector<double> values;

  int max_order() const { return static_cast<int>(values.size()) - 1; }

  /// J_n(z) for any |n| <= max_order(); negative orders use J_{-n} = (-1)^n J_n.
  double operator()(int n) const {
    const int m = n < 0 ? -n : n;
    if (m > max_order()) {
      throw std::out_of_range("BesselRow: order " + std::to_string(n) +
                              " outside computed row of length " +
                              std::to_string(values.size()));
    }
    const double v = values[static_cast<std::size_t>(m)];
    return (n < 0 && (m % 2 != 0)) ? -v : v;
  }
};

namespace detail {

inline void check_argument(double z, const char* who) {
  if (!std::isfinite(z)) {
    throw std::invalid_argument(std::string(who) + ": argument must be finite");
  }
  if (z < 0.0) {
    throw std::invalid_argument(std::string(who) + ": argument must be >= 0");
  }
}

// Truncated ascending series, 30 terms. Used for z < 1 where the backward
// recurrence would start from an underflowing seed.
inline double bessel_j_series(int n, double z) {
  const double half = 0.5 * z;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= half / k;
  }
  double sum = 0.0;
  const double q = -half * half;
  for (int m = 0; m < 30; ++m) {
    sum += term;
    term *= q / ((m + 1.0) * (m + 1.0 + n));
  }
  return sum;
}

}  // namespace detail

/// Row J_0(z)..J_{n_max}(z). Miller backward recurrence from order
/// n_max + ceil(z) + 40, normalized with J_0 + 2 sum_k J_{2k} = 1.
inline BesselRow bessel_j_row(double z, int n_max) {
  detail::check_argument(z, "bessel_j_row");
  if (n_max < 1) {
    throw std::invalid_argument("bessel_j_row: n_max must be >= 1");
  }
  BesselRow row;
  row.z = z;
  row.values.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

  if (z == 0.0) {
    row.values[0] = 1.0;
    return row;
  }
  if (z < 1.0) {
    for (int n = 0; n <= n_max; ++n) {
      row.values[static_cast<std::size_t>(n)] = detail::bessel_j_series(n, z);
    }
    return row;
  }

  const int start = n_max + static_cast<int>(std::ceil(z)) + 40;
  constexpr double kSeed = 1e-30;
  constexpr double kRescaleAbove = 1e200;
  constexpr double kRescaleBy = 1e-200;

  double upper = 0.0;   // J_{k+1}
  double current = kSeed;  // J_k
  double norm = (start % 2 == 0) ? 2.0 * current : 0.0;
  if (start <= n_max) {
    row.values[static_cast<std::size_t>(start)] = current;
  }
  const double two_over_z = 2.0 / z;
  for (int k = start; k >= 1; --k) {
    const double lower = k * two_over_z * current - upper;  // J_{k-1}
    upper = current;
    current = lower;
    const int order = k - 1;
    if (order <= n_max) {
      row.values[static_cast<std::size_t>(order)] = current;
    }
    if (order == 0) {
      norm += current;
    } else if (order % 2 == 0) {
      norm += 2.0 * current;
    }
    if (std::abs(current) > kRescaleAbove) {
      upper *= kRescaleBy;
      current *= kRescaleBy;
      norm *= kRescaleBy;
      for (int j = order; j <= n_max; ++j) {
        row.values[static_cast<std::size_t>(j)] *= kRescaleBy;
      }
    }
  }
  for (double& v : row.values) {
    v /= norm;
  }
  return row;
}

/// Single J_n(z), negative n allowed.
inline double bessel_j(int n, double z) {
  const int m = n < 0 ? -n : n;
  return bessel_j_row(z, m < 1 ? 1 : m)(n);
}

/// |J_0^2 + 2 sum_{n>=1} J_n^2 - 1| over the computed row.
inline double normalization_residual(const BesselRow& row) {
  double s = row.values.empty() ? 0.0 : row.values[0] * row.values[0];
  for (std::size_t n = 1; n < row.values.size(); ++n) {
    s += 2.0 * row.values[n] * row.values[n];
  }
  return std::abs(s - 1.0);
}

/// Partial sum sum_{n=1}^{n_max} n^3 J_n(z)^2.
inline double weighted_cubic_sum(double z, int n_max) {
  const BesselRow row = bessel_j_row(z, n_max);
  double s = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double j = row(n);
    s += static_cast<double>(n) * n * n * j * j;
  }
  return s;
}

/// sum_{n=first}^{last} n^3 J_n(z)^2.
inline double weighted_cubic_sum_range(double z, int first, int last) {
  if (first < 1 || last < first) {
    throw std::invalid_argument("weighted_cubic_sum_range: need 1 <= first <= last");
  }
  const BesselRow row = bessel_j_row(z, last);
  double s = 0.0;
  for (int n = first; n <= last; ++n) {
    const double j = row(n);
    s += static_cast<double>(n) * n * n * j * j;
  }
  return s;
}

/// Lower bound on sum_{n>=1} n^3 J_n(z)^2, valid for z >= 1.
inline double lemma1_lower_bound(double z) {
  if (!(z >= 1.0)) {
    throw std::invalid_argument("lemma1_lower_bound: requires z >= 1");
  }
  constexpr double pi = std::numbers::pi;
  return 2.0 / (3.0 * pi) * z * z * z - 0.5 * z * z * std::log(z) -
         (4.0 - pi) / (4.0 * pi) * z * z - (3.0 * pi - 4.0) / (12.0 * pi);
}

/// Upper bound on the tail sum_{n>K} n^3 J_n(z)^2, valid for K >= 2 and
/// 0 <= z <= eK/4.
inline double lemma2_tail_bound(int K, double z) {
  if (K < 2) {
    throw std::invalid_argument("lemma2_tail_bound: requires K >= 2");
  }
  detail::check_argument(z, "lemma2_tail_bound");
  const double z_max = std::numbers::e * K / 4.0;
  if (z > z_max * (1.0 + 1e-12)) {
    throw std::invalid_argument("lemma2_tail_bound: requires z <= eK/4");
  }
  const double ratio = std::numbers::e * z / (2.0 * K);
  return 0.5 * K * z * z * std::pow(ratio, 2 * K);
}

/// Lower bound 2/(pi z) - 1/z^2 on J_0(z)^2 + J_1(z)^2, valid for z >= 1.
inline double lemma3_lower_bound(double z) {
  if (!(z >= 1.0)) {
    throw std::invalid_argument("lemma3_lower_bound: requires z >= 1");
  }
  return 2.0 / (std::numbers::pi * z) - 1.0 / (z * z);
}

}  // namespace isingquench

#pragma once

// Free-fermion correlation matrices against brute-force spin evolution.

#include <vector>

#include "isingquench/ed_oracle.hpp"
#include "isingquench/entropy.hpp"
#include "isingquench/ising_exact.hpp"

namespace isingquench {

struct CrossPathRow {
  int N = 0;
  int L = 0;
  double t = 0.0;          // fermion time; the spin state is evolved to spin_time_for(t)
  double s_cm = 0.0;       // bits, from the Fourier correlation matrix
  double s_ed = 0.0;       // bits, from the state-vector Schmidt values
  double cm_deviation = 0.0;  // max |Gamma_JW - Gamma_Fourier|, same for every L
  double entropy_deviation() const { return std::abs(s_cm - s_ed); }
};

/// One row per L = 1..floor(N/2) on the periodic ring.
inline std::vector<CrossPathRow> cross_path_compare(int N, double t) {
  detail::check_oracle_size(N, kMaxCorrelationSites, "cross_path_compare");
  const StateVector psi =
      evolve_state(all_ones_state(N), build_spin_hamiltonian(N, Boundary::periodic), spin_time_for(t));
  const CorrelationMatrix ed = jw_correlation_matrix(psi).reordered(Ordering::modewise);
  const CorrelationMatrix cm = gamma_t_fourier(N, t, Limit::finite);
  const double cm_dev = (ed.entries() - cm.entries()).cwiseAbs().maxCoeff();

  std::vector<CrossPathRow> out;
  for (int L = 1; L <= N / 2; ++L) {
    out.push_back({N, L, t, block_entropy(cm, L), reduced_entropy(psi, L), cm_dev});
  }
  return out;
}

}  // namespace isingquench

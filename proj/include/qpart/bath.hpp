#pragma once

#include <cstddef>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

// Discretized bilinear-coupling bath: the system particle plus N oscillators,
// with the counter term that keeps the potential positive definite.
struct FiniteBath {
  double system_mass;                    // M > 0
  double omega0;                         // system pinning, > 0
  std::vector<double> bath_frequencies;  // strictly increasing, > 0
  std::vector<double> couplings;         // c_n
  std::vector<double> bath_masses;       // m_n, all 1 by default
  bool counter_term = true;
};

struct BathSpec {
  std::size_t n_modes = 2000;
  double omega_max = 400.0;
  bool counter_term = true;  // disabling demonstrates the positivity failure
};

// Midpoint discretization of the kernel's spectral density on [0, omega_max]:
// omega_n = (n - 1/2) d_omega and c_n^2 = (2/pi) m_n omega_n J(omega_n) d_omega,
// so the discrete kernel sum converges to gamma(t) at second order in d_omega.
// The system must be pinned (omega0 > 0); approximate a free particle by a
// small pinning epsilon well below every other scale.
FiniteBath build_bath(const SystemModel& s, const BathSpec& spec);

struct NormalModes {
  std::vector<double> frequencies;  // Omega_k ascending, all > 0
  std::vector<double> weights;      // w_k >= 0, sum = 1
};

// Eigendecomposition of the mass-weighted potential matrix
//   V00 = omega0^2 + sum c_n^2 / (M m_n omega_n^2)   (counter term included)
//   V0n = -c_n / sqrt(M m_n),  Vnn = omega_n^2.
// Omega_k = sqrt(eigenvalue), w_k = squared first component of eigenvector k.
NormalModes normal_modes(const FiniteBath& bath);

// Exact Gibbs-state kinetic energy of the system particle:
// sum_k w_k (hbar Omega_k / 4) coth(hbar Omega_k / 2 kB T).
double exact_kinetic(const NormalModes& modes, const ThermalContext& ctx);

// Histogram of the weights over frequency bins: weight per bin / bin_width on
// bin centers, total mass exactly 1; the discrete realization of P(w).
PartitionDensity discrete_partition(const NormalModes& modes, double bin_width);

}  // namespace qpart

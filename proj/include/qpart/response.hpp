#pragma once

#include <complex>

#include "qpart/kernels.hpp"

namespace qpart {

// One tagged particle of mass M, optionally pinned by a harmonic potential of
// frequency omega0, coupled to the bath described by the memory kernel.
struct SystemModel {
  double mass;    // M > 0
  double omega0;  // pinning frequency >= 0; 0 selects the free particle
  MemoryKernel kernel;
};

SystemModel make_system(double mass, double omega0, const MemoryKernel& kernel);

// Momentum susceptibility of the free particle (omega0 = 0):
//   chi(w) = M gamma_hat(-i w) / (-i w M + gamma_hat(-i w)),   chi(0) = M.
std::complex<double> susceptibility_free(const SystemModel& s, double omega);

// Momentum susceptibility of the pinned particle (omega0 > 0), obtained by
// solving the generalized Langevin equation in the Laplace domain (the
// elimination of the bath feeds an initial-slip term -gamma(t) x(0) into the
// momentum response; see docs/response_derivation.md):
//   chi(w) = M (M w0^2 - i w gamma_hat) / (M (w0^2 - w^2) - i w gamma_hat)
//          = M + M^2 w^2 chi_xx(w),                           chi(0) = M.
// The w0 -> 0 limit at fixed w != 0 recovers the free form.
std::complex<double> susceptibility_oscillator(const SystemModel& s, double omega);

// Dispatches on omega0; w = 0 always returns the analytic value M.
std::complex<double> susceptibility(const SystemModel& s, double omega);

// chi''(w) / w evaluated without the 0/0 division; finite for all w >= 0.
// Free particle: M^2 a / (a^2 + (w M - b)^2), equal to M^2/gamma0 at w = 0.
// Oscillator: M^2 w^2 a / ((M (w0^2 - w^2) + w b)^2 + (w a)^2), zero at w = 0.
double imag_over_omega(const SystemModel& s, double omega);

// chi(i w) on the positive imaginary frequency axis (real, positive):
//   free:       M gamma_hat(w) / (w M + gamma_hat(w))
//   oscillator: M (M w0^2 + w gamma_hat(w)) / (M (w0^2 + w^2) + w gamma_hat(w))
double susceptibility_imag_axis(const SystemModel& s, double omega);

// P(w) ~ const / w^p as w -> infinity; p = friction tail exponent + 2
// (2 strict Ohmic, 4 Drude, 6 algebraic cutoff), identical for free and
// pinned systems.
int tail_exponent(const SystemModel& s);

}  // namespace qpart

#pragma once

#include <complex>
#include <string_view>

#include "qpart/errors.hpp"

namespace qpart {

enum class KernelModel { Drude, StrictOhmic, AlgebraicCutoff };

// Memory (friction) kernel of the generalized Langevin equation, represented
// through its Laplace transform gamma_hat(z) with gamma_hat(0) = gamma0.
//   Drude:            gamma0 * omega_c / (z + omega_c)
//   StrictOhmic:      gamma0
//   AlgebraicCutoff:  gamma0 * (omega_c/2) * (z + 2 omega_c) / (z + omega_c)^2
// All three are positive real: Re gamma_hat(-i w) >= 0 for every real w.
struct MemoryKernel {
  KernelModel model;
  double gamma0;   // static friction gamma_hat(0), units mass/time
  double omega_c;  // cutoff frequency, units 1/time; 0 for StrictOhmic
};

MemoryKernel make_kernel(KernelModel model, double gamma0, double omega_c = 0.0);

// gamma_hat(z) for complex z, Re z >= 0 (boundary values z = -i w included).
std::complex<double> laplace_kernel(const MemoryKernel& k, std::complex<double> z);

// Real-axis boundary decomposition gamma_hat(-i w) = a(w) + i b(w), evaluated
// in real arithmetic; a is even and nonnegative, b is odd.
struct FrictionParts {
  double a;
  double b;
};
FrictionParts friction_parts(const MemoryKernel& k, double omega);

// Bath spectral density J(w) = w * Re gamma_hat(-i w), w >= 0.
double spectral_density(const MemoryKernel& k, double omega);

// True when J ~ gamma0 * w at infinity, which makes the mean kinetic energy
// integral log-divergent (most visibly at T = 0).
bool uv_divergent(const MemoryKernel& k);

// High-frequency decay a(w) ~ amplitude / w^exponent, used for closed-form
// tail corrections in downstream quadrature.
struct FrictionTail {
  double amplitude;
  int exponent;  // 0 (StrictOhmic), 2 (Drude), 4 (AlgebraicCutoff)
};
FrictionTail friction_tail(const MemoryKernel& k);

const char* model_name(KernelModel m);
KernelModel model_from_name(std::string_view name);

}  // namespace qpart

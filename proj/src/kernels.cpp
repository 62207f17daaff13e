#include "qpart/kernels.hpp"

#include <cmath>
#include <string>

namespace qpart {

MemoryKernel make_kernel(KernelModel model, double gamma0, double omega_c) {
  if (!(gamma0 > 0.0)) throw ConfigError("memory kernel requires gamma0 > 0");
  if (model == KernelModel::StrictOhmic) return MemoryKernel{model, gamma0, 0.0};
  if (!(omega_c > 0.0))
    throw ConfigError(std::string(model_name(model)) + " kernel requires omega_c > 0");
  return MemoryKernel{model, gamma0, omega_c};
}

std::complex<double> laplace_kernel(const MemoryKernel& k, std::complex<double> z) {
  switch (k.model) {
    case KernelModel::StrictOhmic:
      return {k.gamma0, 0.0};
    case KernelModel::Drude: {
      std::complex<double> d = z + k.omega_c;
      if (std::abs(d) < 1e-12 * k.omega_c)
        throw DomainError("laplace_kernel: evaluation at the Drude pole z = -omega_c");
      return k.gamma0 * k.omega_c / d;
    }
    case KernelModel::AlgebraicCutoff: {
      std::complex<double> d = z + k.omega_c;
      if (std::abs(d) < 1e-12 * k.omega_c)
        throw DomainError("laplace_kernel: evaluation at the double pole z = -omega_c");
      return k.gamma0 * (0.5 * k.omega_c) * (z + 2.0 * k.omega_c) / (d * d);
    }
  }
  throw ConfigError("laplace_kernel: unknown kernel model");
}

FrictionParts friction_parts(const MemoryKernel& k, double omega) {
  switch (k.model) {
    case KernelModel::StrictOhmic:
      return {k.gamma0, 0.0};
    case KernelModel::Drude: {
      // gamma0 omega_c (omega_c + i w) / (omega_c^2 + w^2)
      double den = k.omega_c * k.omega_c + omega * omega;
      return {k.gamma0 * k.omega_c * k.omega_c / den, k.gamma0 * k.omega_c * omega / den};
    }
    case KernelModel::AlgebraicCutoff: {
      // gamma0 (omega_c/2) (2 omega_c - i w) / (omega_c - i w)^2
      double wc2 = k.omega_c * k.omega_c;
      double den = wc2 + omega * omega;
      double den2 = den * den;
      double a = k.gamma0 * wc2 * wc2 / den2;
      double b = k.gamma0 * (0.5 * k.omega_c) * omega * (3.0 * wc2 + omega * omega) / den2;
      return {a, b};
    }
  }
  throw ConfigError("friction_parts: unknown kernel model");
}

double spectral_density(const MemoryKernel& k, double omega) {
  if (omega < 0.0) throw DomainError("spectral_density: omega must be >= 0");
  return omega * friction_parts(k, omega).a;
}

bool uv_divergent(const MemoryKernel& k) { return k.model == KernelModel::StrictOhmic; }

FrictionTail friction_tail(const MemoryKernel& k) {
  switch (k.model) {
    case KernelModel::StrictOhmic:
      return {k.gamma0, 0};
    case KernelModel::Drude:
      return {k.gamma0 * k.omega_c * k.omega_c, 2};
    case KernelModel::AlgebraicCutoff: {
      double wc2 = k.omega_c * k.omega_c;
      return {k.gamma0 * wc2 * wc2, 4};
    }
  }
  throw ConfigError("friction_tail: unknown kernel model");
}

const char* model_name(KernelModel m) {
  switch (m) {
    case KernelModel::Drude:
      return "drude";
    case KernelModel::StrictOhmic:
      return "strict_ohmic";
    case KernelModel::AlgebraicCutoff:
      return "algebraic_cutoff";
  }
  return "unknown";
}

KernelModel model_from_name(std::string_view name) {
  if (name == "drude") return KernelModel::Drude;
  if (name == "strict_ohmic") return KernelModel::StrictOhmic;
  if (name == "algebraic_cutoff") return KernelModel::AlgebraicCutoff;
  throw ConfigError("unknown kernel model '" + std::string(name) +
                    "' (expected drude, strict_ohmic, or algebraic_cutoff)");
}

}  // namespace qpart

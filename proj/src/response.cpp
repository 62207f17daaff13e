#include "qpart/response.hpp"

#include <cmath>

namespace qpart {

namespace {

// gamma_hat(x) on the positive real Laplace axis, kept in real arithmetic.
double laplace_real(const MemoryKernel& k, double x) {
  switch (k.model) {
    case KernelModel::StrictOhmic:
      return k.gamma0;
    case KernelModel::Drude:
      return k.gamma0 * k.omega_c / (x + k.omega_c);
    case KernelModel::AlgebraicCutoff: {
      double d = x + k.omega_c;
      return k.gamma0 * (0.5 * k.omega_c) * (x + 2.0 * k.omega_c) / (d * d);
    }
  }
  throw ConfigError("laplace_real: unknown kernel model");
}

}  // namespace

SystemModel make_system(double mass, double omega0, const MemoryKernel& kernel) {
  if (!(mass > 0.0)) throw ConfigError("system requires mass > 0");
  if (!(omega0 >= 0.0)) throw ConfigError("system requires omega0 >= 0");
  return SystemModel{mass, omega0, kernel};
}

std::complex<double> susceptibility_free(const SystemModel& s, double omega) {
  double M = s.mass;
  if (omega == 0.0) return {M, 0.0};
  FrictionParts g = friction_parts(s.kernel, omega);
  // chi = M (a + i b) / (a + i (b - w M))
  double dr = g.a;
  double di = g.b - omega * M;
  double den = dr * dr + di * di;
  double re = M * (g.a * dr + g.b * di) / den;
  double im = M * (g.b * dr - g.a * di) / den;
  return {re, im};
}

std::complex<double> susceptibility_oscillator(const SystemModel& s, double omega) {
  double M = s.mass;
  if (omega == 0.0) return {M, 0.0};
  FrictionParts g = friction_parts(s.kernel, omega);
  double w0sq = s.omega0 * s.omega0;
  // chi = [M (M w0^2 + w b) - i M w a] / [(M (w0^2 - w^2) + w b) - i w a]
  double nr = M * (M * w0sq + omega * g.b);
  double ni = -M * omega * g.a;
  double dr = M * (w0sq - omega * omega) + omega * g.b;
  double di = -omega * g.a;
  double den = dr * dr + di * di;
  double re = (nr * dr + ni * di) / den;
  double im = (ni * dr - nr * di) / den;
  return {re, im};
}

std::complex<double> susceptibility(const SystemModel& s, double omega) {
  return s.omega0 > 0.0 ? susceptibility_oscillator(s, omega) : susceptibility_free(s, omega);
}

double imag_over_omega(const SystemModel& s, double omega) {
  double M = s.mass;
  FrictionParts g = friction_parts(s.kernel, omega);
  if (s.omega0 > 0.0) {
    if (omega == 0.0) return 0.0;
    double dr = M * (s.omega0 * s.omega0 - omega * omega) + omega * g.b;
    double di = omega * g.a;
    return M * M * omega * omega * g.a / (dr * dr + di * di);
  }
  double dr = g.a;
  double di = omega * M - g.b;
  return M * M * g.a / (dr * dr + di * di);
}

double susceptibility_imag_axis(const SystemModel& s, double omega) {
  if (!(omega > 0.0)) throw DomainError("susceptibility_imag_axis: omega must be > 0");
  double M = s.mass;
  double g = laplace_real(s.kernel, omega);
  if (s.omega0 > 0.0) {
    double w0sq = s.omega0 * s.omega0;
    return M * (M * w0sq + omega * g) / (M * (w0sq + omega * omega) + omega * g);
  }
  return M * g / (omega * M + g);
}

int tail_exponent(const SystemModel& s) { return friction_tail(s.kernel).exponent + 2; }

}  // namespace qpart

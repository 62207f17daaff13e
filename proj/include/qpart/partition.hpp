#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qpart/quadrature.hpp"
#include "qpart/response.hpp"

namespace qpart {

struct ThermalContext {
  double temperature;  // T >= 0, units energy / kB
  double hbar = 1.0;
  double kB = 1.0;
};

ThermalContext make_thermal(double temperature, double hbar = 1.0, double kB = 1.0);

struct GridSpec {
  enum class Spacing { Linear, Log };
  double omega_max = 50.0;
  std::size_t n_points = 2000;
  Spacing spacing = Spacing::Linear;
  double omega_min = 0.0;  // log spacing only; 0 selects omega_max * 1e-4
};

struct PartitionDensity {
  std::vector<double> grid;             // strictly increasing, >= 0
  std::vector<double> values;           // P(grid[i]) >= 0, units time
  std::optional<SystemModel> system;    // provenance; empty for histograms
  int tail_exponent;                    // P ~ 1/w^p beyond the grid; 0 = compact support
};

// Thermal kinetic energy of one mode, (hbar w / 4) coth(hbar w / 2 kB T).
// Stable branches: series below hbar w / 2 kB T = 1e-4, expm1 form above,
// coth = 1 analytically at T = 0. The w = 0, T = 0 corner is undefined.
double kinetic_per_mode(const ThermalContext& ctx, double omega);

// P(w) = (2 / pi M) chi''(w) / w, with the analytic w = 0 limit.
double partition_value(const SystemModel& s, double omega);

PartitionDensity partition_density(const SystemModel& s, const GridSpec& grid);

// Trapezoid over the stored grid plus the closed-form power tail.
double norm_integral(const PartitionDensity& d);

struct QuadSpec {
  double tolerance = 1e-10;       // absolute error target for the quadrature
  double omega_max = 0.0;         // explicit upper cutoff; 0 = automatic
  std::size_t max_intervals = 4000;
};

// Adaptive quadrature of P over [0, inf): 1 for every admissible system.
double normalization(const SystemModel& s, const QuadSpec& quad = {});

struct EnergyResult {
  double kinetic_energy;
  double p_squared;   // 2 M Ek
  double quad_error;  // estimated absolute error
  double omega_cut;   // upper integration limit actually used
  bool truncated;     // true when the value is a cut integral, not [0, inf)
};

// Ek = int_0^inf kinetic_per_mode(w) P(w) dw. For a uv-divergent kernel the
// full integral does not exist: with an explicit quad.omega_max the truncated
// model is integrated as requested; otherwise, at T > 0, the documented policy
// cutoff max(kB T / hbar, 1e3 max(omega0, gamma0 / M)) is applied and the
// result flagged truncated; at T = 0 a DivergenceError names the log tail.
EnergyResult mean_kinetic_energy(const SystemModel& s, const ThermalContext& ctx,
                                 const QuadSpec& quad = {});

}  // namespace qpart

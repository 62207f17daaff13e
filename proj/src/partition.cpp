#include "qpart/partition.hpp"

#include <algorithm>
#include <cmath>

#include "seeding.hpp"

namespace qpart {

namespace {

const double kPi = 3.14159265358979323846;

void validate_thermal(const ThermalContext& ctx) {
  if (!(ctx.temperature >= 0.0)) throw ConfigError("thermal context requires T >= 0");
  if (!(ctx.hbar > 0.0)) throw ConfigError("thermal context requires hbar > 0");
  if (!(ctx.kB > 0.0)) throw ConfigError("thermal context requires kB > 0");
}

// P(w) ~ tail_coefficient / w^p with p = tail_exponent(s).
double tail_coefficient(const SystemModel& s) {
  FrictionTail t = friction_tail(s.kernel);
  return 2.0 * t.amplitude / (kPi * s.mass);
}

// Upper cutoff for the normalization integral: past all physics scales and far
// enough out that the closed-form tail is below ~1e-9 (it is added anyway; its
// own relative error falls off two powers faster).
double norm_cutoff(const SystemModel& s) {
  double p = tail_exponent(s);
  double c = tail_coefficient(s);
  double from_tail = std::pow(c / ((p - 1.0) * 1e-9), 1.0 / (p - 1.0));
  return std::max(1e3 * detail::system_scale(s), from_tail);
}

// Upper cutoff for the energy integral of a convergent (non-Ohmic-tail) model.
double energy_cutoff(const SystemModel& s, const ThermalContext& ctx, double thermal_freq) {
  double p = tail_exponent(s) - 1.0;  // integrand decays one power slower than P
  double scale = detail::system_scale(s);
  double c = 0.25 * ctx.hbar * tail_coefficient(s);
  double target = 1e-8 * std::max(0.5 * ctx.kB * ctx.temperature, 0.25 * ctx.hbar * scale);
  double from_tail = std::pow(c / ((p - 1.0) * target), 1.0 / (p - 1.0));
  return std::max({1e3 * scale, 100.0 * thermal_freq, from_tail});
}

}  // namespace

ThermalContext make_thermal(double temperature, double hbar, double kB) {
  ThermalContext ctx{temperature, hbar, kB};
  validate_thermal(ctx);
  return ctx;
}

double kinetic_per_mode(const ThermalContext& ctx, double omega) {
  validate_thermal(ctx);
  if (!(omega >= 0.0)) throw DomainError("kinetic_per_mode: omega must be >= 0");
  if (ctx.temperature == 0.0) {
    if (omega == 0.0)
      throw DomainError("kinetic_per_mode: undefined limit ordering at omega = 0, T = 0");
    return 0.25 * ctx.hbar * omega;  // coth = 1 analytically
  }
  double kT = ctx.kB * ctx.temperature;
  if (omega == 0.0) return 0.5 * kT;
  double x = 0.5 * ctx.hbar * omega / kT;
  if (x < 1e-4) {
    double x2 = x * x;
    return 0.5 * kT * (1.0 + x2 / 3.0 - x2 * x2 / 45.0);
  }
  return 0.25 * ctx.hbar * omega * (1.0 + 2.0 / std::expm1(2.0 * x));
}

double partition_value(const SystemModel& s, double omega) {
  if (!(omega >= 0.0)) throw DomainError("partition_value: omega must be >= 0");
  return 2.0 / (kPi * s.mass) * imag_over_omega(s, omega);
}

PartitionDensity partition_density(const SystemModel& s, const GridSpec& spec) {
  if (!(spec.omega_max > 0.0)) throw ConfigError("grid spec requires omega_max > 0");
  if (spec.n_points < 2) throw ConfigError("grid spec requires n_points >= 2");
  std::size_t n = spec.n_points;
  std::vector<double> grid(n);
  if (spec.spacing == GridSpec::Spacing::Linear) {
    if (spec.omega_min != 0.0) throw ConfigError("grid spec: omega_min applies to log spacing only");
    for (std::size_t i = 0; i < n; ++i)
      grid[i] = spec.omega_max * static_cast<double>(i) / static_cast<double>(n - 1);
  } else {
    double lo = spec.omega_min > 0.0 ? spec.omega_min : 1e-4 * spec.omega_max;
    if (!(lo < spec.omega_max)) throw ConfigError("grid spec requires omega_min < omega_max");
    double ratio = spec.omega_max / lo;
    for (std::size_t i = 0; i < n; ++i)
      grid[i] = lo * std::pow(ratio, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = partition_value(s, grid[i]);
  return PartitionDensity{std::move(grid), std::move(values), s, tail_exponent(s)};
}

double norm_integral(const PartitionDensity& d) {
  if (d.grid.size() != d.values.size() || d.grid.size() < 2)
    throw ConfigError("norm_integral: malformed density");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < d.grid.size(); ++i)
    sum += 0.5 * (d.values[i] + d.values[i + 1]) * (d.grid[i + 1] - d.grid[i]);
  if (d.grid.front() > 0.0) {
    double p0 = d.system ? partition_value(*d.system, 0.0) : d.values.front();
    sum += 0.5 * (p0 + d.values.front()) * d.grid.front();
  }
  if (d.tail_exponent >= 2)
    sum += power_tail(d.values.back(), d.grid.back(), static_cast<double>(d.tail_exponent));
  return sum;
}

double normalization(const SystemModel& s, const QuadSpec& quad) {
  if (!(quad.tolerance > 0.0)) throw ConfigError("quad spec requires tolerance > 0");
  double cut = quad.omega_max > 0.0 ? quad.omega_max : norm_cutoff(s);
  QuadOptions opt;
  opt.abs_tol = quad.tolerance;
  opt.rel_tol = 1e-12;
  opt.max_intervals = quad.max_intervals;
  auto f = [&s](double w) { return partition_value(s, w); };
  QuadResult r = integrate_gk(f, 0.0, cut, detail::frequency_breakpoints(s, 0.0, cut), opt);
  double total = r.value;
  if (quad.omega_max <= 0.0)
    total += power_tail(partition_value(s, cut), cut, static_cast<double>(tail_exponent(s)));
  return total;
}

EnergyResult mean_kinetic_energy(const SystemModel& s, const ThermalContext& ctx,
                                 const QuadSpec& quad) {
  validate_thermal(ctx);
  if (!(quad.tolerance > 0.0)) throw ConfigError("quad spec requires tolerance > 0");
  double kT = ctx.kB * ctx.temperature;
  double thermal_freq = ctx.temperature > 0.0 ? kT / ctx.hbar : 0.0;
  bool divergent = uv_divergent(s.kernel);
  bool explicit_cut = quad.omega_max > 0.0;

  double cut;
  bool truncated;
  bool add_tail;
  if (explicit_cut) {
    cut = quad.omega_max;
    truncated = true;
    add_tail = false;
  } else if (divergent) {
    if (ctx.temperature == 0.0)
      throw DivergenceError(
          "mean_kinetic_energy diverges for a strictly Ohmic kernel at T = 0: the integrand "
          "decays like hbar*gamma0/(2*pi*M*omega), a logarithmic tail; pass quad.omega_max "
          "to integrate a truncated model");
    cut = std::max(thermal_freq, 1e3 * std::max(s.omega0, s.kernel.gamma0 / s.mass));
    truncated = true;
    add_tail = false;
  } else {
    cut = energy_cutoff(s, ctx, thermal_freq);
    truncated = false;
    add_tail = true;
  }

  auto f = [&s, &ctx](double w) { return kinetic_per_mode(ctx, w) * partition_value(s, w); };
  QuadOptions opt;
  opt.abs_tol = quad.tolerance;
  opt.rel_tol = 1e-12;
  opt.max_intervals = quad.max_intervals;
  QuadResult r =
      integrate_gk(f, 0.0, cut, detail::frequency_breakpoints(s, thermal_freq, cut), opt);
  double energy = r.value;
  double err = r.error;
  if (add_tail) {
    double tail = power_tail(f(cut), cut, static_cast<double>(tail_exponent(s)) - 1.0);
    energy += tail;
    double near = std::max(detail::system_scale(s), thermal_freq) / cut;
    err += std::fabs(tail) * near * near;
  }
  return EnergyResult{energy, 2.0 * s.mass * energy, err, cut, truncated};
}

}  // namespace qpart

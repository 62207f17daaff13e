#include "qpart/qpart.h"

#include <complex>
#include <cstdio>
#include <cstring>
#include <string>
#include <utility>

#include "qpart/bath.hpp"
#include "qpart/errors.hpp"
#include "qpart/kernels.hpp"
#include "qpart/partition.hpp"
#include "qpart/response.hpp"
#include "qpart/verify.hpp"

struct qpart_kernel {
  qpart::MemoryKernel v;
};
struct qpart_system {
  qpart::SystemModel v;
};
struct qpart_density {
  qpart::PartitionDensity v;
};
struct qpart_bath {
  qpart::FiniteBath v;
};
struct qpart_modes {
  qpart::NormalModes v;
};

namespace {

thread_local std::string g_error;

qpart_status fail(qpart_status st, const char* msg) {
  g_error = msg;
  return st;
}

template <typename F>
qpart_status wrap(F&& f) {
  try {
    f();
    return QPART_OK;
  } catch (const qpart::ConfigError& e) {
    return fail(QPART_ERR_INVALID, e.what());
  } catch (const qpart::DomainError& e) {
    return fail(QPART_ERR_DOMAIN, e.what());
  } catch (const qpart::DivergenceError& e) {
    return fail(QPART_ERR_DIVERGENT, e.what());
  } catch (const qpart::AccuracyError& e) {
    return fail(QPART_ERR_ACCURACY, e.what());
  } catch (const qpart::NumericalError& e) {
    return fail(QPART_ERR_NUMERICAL, e.what());
  } catch (const std::exception& e) {
    return fail(QPART_ERR_NUMERICAL, e.what());
  }
}

qpart_status require(bool ok, const char* what) {
  return ok ? QPART_OK : fail(QPART_ERR_INVALID, what);
}

qpart::GridSpec to_grid(const qpart_grid_spec& g) {
  qpart::GridSpec spec;
  spec.omega_max = g.omega_max;
  spec.n_points = g.n_points;
  spec.spacing = g.log_spacing ? qpart::GridSpec::Spacing::Log : qpart::GridSpec::Spacing::Linear;
  spec.omega_min = g.omega_min;
  return spec;
}

qpart::QuadSpec to_quad(const qpart_quad_spec* q) {
  qpart::QuadSpec spec;
  if (q) {
    spec.tolerance = q->tolerance;
    spec.omega_max = q->omega_max;
    spec.max_intervals = q->max_intervals;
  }
  return spec;
}

void to_report(const qpart::VerificationReport& in, qpart_report* out) {
  std::snprintf(out->check_name, sizeof(out->check_name), "%s", in.check_name.c_str());
  out->expected = in.expected;
  out->computed = in.computed;
  out->tolerance = in.tolerance;
  out->passed = in.passed ? 1 : 0;
}

qpart::VerifyOptions to_options(const qpart_verify_options* opt) {
  qpart::VerifyOptions v;
  if (opt) v.prefactor_scale = opt->prefactor_scale;
  return v;
}

}  // namespace

extern "C" {

const char* qpart_last_error(void) { return g_error.c_str(); }

qpart_status qpart_kernel_create(const char* model, double gamma0, double omega_c,
                                 qpart_kernel** out) {
  if (qpart_status st = require(model && out, "qpart_kernel_create: null argument")) return st;
  return wrap([&] {
    qpart::MemoryKernel k = qpart::make_kernel(qpart::model_from_name(model), gamma0, omega_c);
    *out = new qpart_kernel{k};
  });
}

void qpart_kernel_destroy(qpart_kernel* k) { delete k; }

qpart_status qpart_kernel_laplace(const qpart_kernel* k, double z_re, double z_im, double* out_re,
                                  double* out_im) {
  if (qpart_status st = require(k && out_re && out_im, "qpart_kernel_laplace: null argument"))
    return st;
  return wrap([&] {
    std::complex<double> g = qpart::laplace_kernel(k->v, {z_re, z_im});
    *out_re = g.real();
    *out_im = g.imag();
  });
}

qpart_status qpart_spectral_density(const qpart_kernel* k, double omega, double* out) {
  if (qpart_status st = require(k && out, "qpart_spectral_density: null argument")) return st;
  return wrap([&] { *out = qpart::spectral_density(k->v, omega); });
}

qpart_status qpart_uv_divergent(const qpart_kernel* k, int* out) {
  if (qpart_status st = require(k && out, "qpart_uv_divergent: null argument")) return st;
  return wrap([&] { *out = qpart::uv_divergent(k->v) ? 1 : 0; });
}

qpart_status qpart_system_create(const qpart_kernel* k, double mass, double omega0,
                                 qpart_system** out) {
  if (qpart_status st = require(k && out, "qpart_system_create: null argument")) return st;
  return wrap([&] { *out = new qpart_system{qpart::make_system(mass, omega0, k->v)}; });
}

void qpart_system_destroy(qpart_system* s) { delete s; }

qpart_status qpart_susceptibility(const qpart_system* s, double omega, double* out_re,
                                  double* out_im) {
  if (qpart_status st = require(s && out_re && out_im, "qpart_susceptibility: null argument"))
    return st;
  return wrap([&] {
    std::complex<double> c = qpart::susceptibility(s->v, omega);
    *out_re = c.real();
    *out_im = c.imag();
  });
}

qpart_status qpart_susceptibility_imag_axis(const qpart_system* s, double omega, double* out) {
  if (qpart_status st = require(s && out, "qpart_susceptibility_imag_axis: null argument"))
    return st;
  return wrap([&] { *out = qpart::susceptibility_imag_axis(s->v, omega); });
}

qpart_status qpart_kinetic_per_mode(double temperature, double hbar, double kB, double omega,
                                    double* out) {
  if (qpart_status st = require(out != nullptr, "qpart_kinetic_per_mode: null argument"))
    return st;
  return wrap([&] {
    qpart::ThermalContext ctx = qpart::make_thermal(temperature, hbar, kB);
    *out = qpart::kinetic_per_mode(ctx, omega);
  });
}

qpart_status qpart_partition_density(const qpart_system* s, const qpart_grid_spec* grid,
                                     qpart_density** out) {
  if (qpart_status st = require(s && grid && out, "qpart_partition_density: null argument"))
    return st;
  return wrap([&] {
    *out = new qpart_density{qpart::partition_density(s->v, to_grid(*grid))};
  });
}

void qpart_density_destroy(qpart_density* d) { delete d; }

qpart_status qpart_density_size(const qpart_density* d, size_t* out) {
  if (qpart_status st = require(d && out, "qpart_density_size: null argument")) return st;
  *out = d->v.grid.size();
  return QPART_OK;
}

qpart_status qpart_density_point(const qpart_density* d, size_t i, double* out_omega,
                                 double* out_value) {
  if (qpart_status st = require(d && out_omega && out_value, "qpart_density_point: null argument"))
    return st;
  if (i >= d->v.grid.size()) return fail(QPART_ERR_INVALID, "qpart_density_point: index out of range");
  *out_omega = d->v.grid[i];
  *out_value = d->v.values[i];
  return QPART_OK;
}

qpart_status qpart_density_tail_exponent(const qpart_density* d, int* out) {
  if (qpart_status st = require(d && out, "qpart_density_tail_exponent: null argument")) return st;
  *out = d->v.tail_exponent;
  return QPART_OK;
}

qpart_status qpart_density_norm(const qpart_density* d, double* out) {
  if (qpart_status st = require(d && out, "qpart_density_norm: null argument")) return st;
  return wrap([&] { *out = qpart::norm_integral(d->v); });
}

qpart_status qpart_normalization(const qpart_system* s, const qpart_quad_spec* quad, double* out) {
  if (qpart_status st = require(s && out, "qpart_normalization: null argument")) return st;
  return wrap([&] { *out = qpart::normalization(s->v, to_quad(quad)); });
}

qpart_status qpart_mean_kinetic_energy(const qpart_system* s, double temperature, double hbar,
                                       double kB, const qpart_quad_spec* quad, qpart_energy* out) {
  if (qpart_status st = require(s && out, "qpart_mean_kinetic_energy: null argument")) return st;
  return wrap([&] {
    qpart::ThermalContext ctx = qpart::make_thermal(temperature, hbar, kB);
    qpart::EnergyResult e = qpart::mean_kinetic_energy(s->v, ctx, to_quad(quad));
    out->kinetic_energy = e.kinetic_energy;
    out->p_squared = e.p_squared;
    out->quad_error = e.quad_error;
    out->omega_cut = e.omega_cut;
    out->truncated = e.truncated ? 1 : 0;
  });
}

qpart_status qpart_bath_build(const qpart_system* s, size_t n_modes, double omega_max,
                              int counter_term, qpart_bath** out) {
  if (qpart_status st = require(s && out, "qpart_bath_build: null argument")) return st;
  return wrap([&] {
    qpart::BathSpec spec;
    spec.n_modes = n_modes;
    spec.omega_max = omega_max;
    spec.counter_term = counter_term != 0;
    *out = new qpart_bath{qpart::build_bath(s->v, spec)};
  });
}

void qpart_bath_destroy(qpart_bath* b) { delete b; }

qpart_status qpart_bath_modes(const qpart_bath* b, qpart_modes** out) {
  if (qpart_status st = require(b && out, "qpart_bath_modes: null argument")) return st;
  return wrap([&] { *out = new qpart_modes{qpart::normal_modes(b->v)}; });
}

void qpart_modes_destroy(qpart_modes* m) { delete m; }

qpart_status qpart_modes_size(const qpart_modes* m, size_t* out) {
  if (qpart_status st = require(m && out, "qpart_modes_size: null argument")) return st;
  *out = m->v.frequencies.size();
  return QPART_OK;
}

qpart_status qpart_modes_point(const qpart_modes* m, size_t i, double* out_freq,
                               double* out_weight) {
  if (qpart_status st = require(m && out_freq && out_weight, "qpart_modes_point: null argument"))
    return st;
  if (i >= m->v.frequencies.size())
    return fail(QPART_ERR_INVALID, "qpart_modes_point: index out of range");
  *out_freq = m->v.frequencies[i];
  *out_weight = m->v.weights[i];
  return QPART_OK;
}

qpart_status qpart_exact_kinetic(const qpart_modes* m, double temperature, double hbar, double kB,
                                 double* out) {
  if (qpart_status st = require(m && out, "qpart_exact_kinetic: null argument")) return st;
  return wrap([&] {
    qpart::ThermalContext ctx = qpart::make_thermal(temperature, hbar, kB);
    *out = qpart::exact_kinetic(m->v, ctx);
  });
}

qpart_status qpart_discrete_partition(const qpart_modes* m, double bin_width,
                                      qpart_density** out) {
  if (qpart_status st = require(m && out, "qpart_discrete_partition: null argument")) return st;
  return wrap([&] { *out = new qpart_density{qpart::discrete_partition(m->v, bin_width)}; });
}

qpart_status qpart_kk_real_from_imag(const qpart_system* s, double omega, double* out) {
  if (qpart_status st = require(s && out, "qpart_kk_real_from_imag: null argument")) return st;
  return wrap([&] { *out = qpart::kk_real_from_imag(s->v, omega); });
}

qpart_status qpart_sum_rule_check(const qpart_system* s, const qpart_verify_options* opt,
                                  qpart_report* out) {
  if (qpart_status st = require(s && out, "qpart_sum_rule_check: null argument")) return st;
  return wrap([&] { to_report(qpart::sum_rule_check(s->v, to_options(opt)), out); });
}

qpart_status qpart_imag_axis_identity(const qpart_system* s, double omega, qpart_report* out) {
  if (qpart_status st = require(s && out, "qpart_imag_axis_identity: null argument")) return st;
  return wrap([&] { to_report(qpart::imag_axis_identity(s->v, omega), out); });
}

qpart_status qpart_classical_limit_check(const qpart_system* s, double temperature, double hbar,
                                         double kB, qpart_report* out) {
  if (qpart_status st = require(s && out, "qpart_classical_limit_check: null argument")) return st;
  return wrap([&] {
    qpart::ThermalContext ctx = qpart::make_thermal(temperature, hbar, kB);
    to_report(qpart::classical_limit_check(s->v, ctx), out);
  });
}

qpart_status qpart_default_suite(const qpart_verify_options* opt, qpart_report** reports_out,
                                 size_t* count_out) {
  if (qpart_status st =
          require(reports_out && count_out, "qpart_default_suite: null argument"))
    return st;
  return wrap([&] {
    std::vector<qpart::VerificationReport> rs = qpart::default_suite(to_options(opt));
    qpart_report* arr = new qpart_report[rs.size()];
    for (size_t i = 0; i < rs.size(); ++i) to_report(rs[i], &arr[i]);
    *reports_out = arr;
    *count_out = rs.size();
  });
}

void qpart_reports_destroy(qpart_report* reports) { delete[] reports; }

}  // extern "C"

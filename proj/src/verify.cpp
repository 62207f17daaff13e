#include "qpart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "seeding.hpp"

namespace qpart {

namespace {

const double kPi = 3.14159265358979323846;

double rel_diff(double computed, double expected) {
  return std::fabs(computed - expected) / std::fabs(expected);
}

// Upper cutoff past every scale such that a tail ~ coefficient / u^p beyond it
// stays below target; the tail is still added in closed form afterwards.
double verify_cutoff(const SystemModel& s, double floor_scale, double coefficient, double p,
                     double target) {
  double from_tail = std::pow(coefficient / ((p - 1.0) * target), 1.0 / (p - 1.0));
  return std::max({1e3 * detail::system_scale(s), floor_scale, from_tail});
}

std::string describe(const SystemModel& s) {
  std::ostringstream os;
  os << model_name(s.kernel.model) << " gamma0=" << s.kernel.gamma0;
  if (s.kernel.model != KernelModel::StrictOhmic) os << " omega_c=" << s.kernel.omega_c;
  os << " M=" << s.mass << " omega0=" << s.omega0;
  return os.str();
}

}  // namespace

double kk_real_from_imag(const SystemModel& s, double omega) {
  if (!(omega >= 0.0)) throw DomainError("kk_real_from_imag: omega must be >= 0");
  double M = s.mass;
  FrictionTail ft = friction_tail(s.kernel);
  double p = static_cast<double>(ft.exponent) + 2.0;
  double tail_coef = 2.0 / kPi * ft.amplitude;  // integrand ~ tail_coef / u^p
  double cut = verify_cutoff(s, 10.0 * omega, tail_coef, p, 1e-10 * std::max(1.0, M));
  QuadOptions opt;
  opt.abs_tol = 1e-11 * std::max(1.0, M);
  opt.rel_tol = 0.0;
  std::vector<double> bps = detail::frequency_breakpoints(s, 0.0, cut);

  if (omega == 0.0) {
    double scale = detail::system_scale(s);
    auto g = [&](double u) {
      if (u == 0.0) u = 1e-7 * scale;  // one-sided limit of chi''(u)/u at the origin
      return 2.0 / kPi * susceptibility(s, u).imag() / u;
    };
    QuadResult r = integrate_simpson(g, 0.0, cut, bps, opt);
    return r.value + power_tail(g(cut), cut, p);
  }

  auto g = [&](double u) {
    return 2.0 / kPi * u * susceptibility(s, u).imag() / ((u - omega) * (u + omega));
  };
  auto h = [&](double u) { return u * susceptibility(s, u).imag() / (u + omega); };

  auto evaluate = [&](double delta) {
    std::vector<double> left_bps = bps, right_bps = bps;
    for (double k = 2.0; k <= 4096.0; k *= 2.0) {
      left_bps.push_back(omega - k * delta);
      right_bps.push_back(omega + k * delta);
    }
    double total = 0.0;
    if (omega - delta > 0.0)
      total += integrate_simpson(g, 0.0, omega - delta, left_bps, opt).value;
    total += integrate_simpson(g, omega + delta, cut, right_bps, opt).value;
    double hp = (-h(omega + 2.0 * delta) + 8.0 * h(omega + delta) - 8.0 * h(omega - delta) +
                 h(omega - 2.0 * delta)) /
                (12.0 * delta);
    double hppp = (h(omega + 2.0 * delta) - 2.0 * h(omega + delta) + 2.0 * h(omega - delta) -
                   h(omega - 2.0 * delta)) /
                  (2.0 * delta * delta * delta);
    total += 2.0 / kPi * (2.0 * delta * hp + delta * delta * delta * hppp / 9.0);
    total += power_tail(g(cut), cut, p);
    return total;
  };

  double delta = 1e-3 * omega;
  double coarse = evaluate(delta);
  double fine = evaluate(0.5 * delta);
  if (std::fabs(coarse - fine) > 1e-8 * std::max(1.0, std::fabs(fine))) {
    std::ostringstream os;
    os << "kk_real_from_imag: excision self-test failed at omega = " << omega << ": delta and "
       << "delta/2 results differ by " << std::fabs(coarse - fine);
    throw AccuracyError(os.str());
  }
  return fine;
}

VerificationReport sum_rule_check(const SystemModel& s, const VerifyOptions& opt) {
  double M = s.mass;
  FrictionTail ft = friction_tail(s.kernel);
  double p = static_cast<double>(ft.exponent) + 2.0;
  double pref = 2.0 * opt.prefactor_scale / (kPi * M);
  double tail_coef = std::fabs(pref) * ft.amplitude;  // integrand ~ pref A / u^p
  double cut = verify_cutoff(s, 0.0, std::max(tail_coef, 1e-300), p, 1e-9);
  auto f = [&](double u) { return pref * imag_over_omega(s, u); };
  QuadOptions qopt;
  qopt.abs_tol = 1e-10;
  qopt.rel_tol = 0.0;
  QuadResult r = integrate_simpson(f, 0.0, cut, detail::frequency_breakpoints(s, 0.0, cut), qopt);
  double computed = r.value + power_tail(f(cut), cut, p);
  VerificationReport rep;
  rep.check_name = "sum_rule " + describe(s);
  rep.expected = 1.0;
  rep.computed = computed;
  rep.tolerance = 1e-6;
  rep.passed = rel_diff(computed, 1.0) <= rep.tolerance;
  return rep;
}

VerificationReport imag_axis_identity(const SystemModel& s, double omega) {
  if (!(omega > 0.0)) throw DomainError("imag_axis_identity: omega must be > 0");
  double closed = susceptibility_imag_axis(s, omega);
  FrictionTail ft = friction_tail(s.kernel);
  double p = static_cast<double>(ft.exponent) + 2.0;
  double tail_coef = 2.0 / kPi * ft.amplitude;
  double cut = verify_cutoff(s, 10.0 * omega, tail_coef, p, 1e-10 * closed);
  auto f = [&](double u) {
    return 2.0 / kPi * u * susceptibility(s, u).imag() / (omega * omega + u * u);
  };
  QuadOptions qopt;
  qopt.abs_tol = std::max(1e-9 * closed, 1e-13);
  qopt.rel_tol = 0.0;
  std::vector<double> bps = detail::frequency_breakpoints(s, 0.0, cut);
  bps.push_back(0.5 * omega);
  bps.push_back(omega);
  bps.push_back(2.0 * omega);
  QuadResult r = integrate_simpson(f, 0.0, cut, bps, qopt);
  double computed = r.value + power_tail(f(cut), cut, p);
  std::ostringstream name;
  name << "imag_axis omega=" << omega << " " << describe(s);
  VerificationReport rep;
  rep.check_name = name.str();
  rep.expected = closed;
  rep.computed = computed;
  rep.tolerance = 1e-6;
  rep.passed = rel_diff(computed, closed) <= rep.tolerance;
  return rep;
}

VerificationReport classical_limit_check(const SystemModel& s, const ThermalContext& ctx) {
  double kT = ctx.kB * ctx.temperature;
  double scale = detail::system_scale(s);
  double ratio_scale = kT / (ctx.hbar * scale);
  if (ratio_scale < 100.0)
    throw ConfigError(
        "classical_limit_check requires kB T >= 100 hbar max(omega0, gamma0/M, omega_c)");
  EnergyResult e = mean_kinetic_energy(s, ctx);
  double computed = e.kinetic_energy / (0.5 * kT);
  std::ostringstream name;
  name << "classical_limit kT/scale=" << ratio_scale << " " << describe(s);
  VerificationReport rep;
  rep.check_name = name.str();
  rep.expected = 1.0;
  rep.computed = computed;
  rep.tolerance = ratio_scale >= 1000.0 ? 1e-3 : 1e-2;
  rep.passed = rel_diff(computed, 1.0) <= rep.tolerance;
  return rep;
}

std::vector<VerificationReport> default_suite(const VerifyOptions& opt) {
  std::vector<MemoryKernel> kernels = {
      make_kernel(KernelModel::Drude, 1.0, 10.0),
      make_kernel(KernelModel::StrictOhmic, 1.0),
      make_kernel(KernelModel::AlgebraicCutoff, 1.0, 10.0),
  };
  struct Body {
    double mass, omega0;
  };
  std::vector<Body> bodies = {{1.0, 0.0}, {2.5, 0.0}, {1.0, 1.0}, {0.7, 1.3}};

  auto run_one = [&opt](const SystemModel& s) {
    std::vector<VerificationReport> out;
    out.push_back(sum_rule_check(s, opt));
    out.push_back(imag_axis_identity(s, 0.5));
    out.push_back(imag_axis_identity(s, 2.0));
    {
      double kk0 = kk_real_from_imag(s, 0.0);
      VerificationReport rep;
      rep.check_name = "kk_zero_frequency " + describe(s);
      rep.expected = s.mass;
      rep.computed = kk0;
      rep.tolerance = 1e-4;
      rep.passed = rel_diff(kk0, s.mass) <= rep.tolerance;
      out.push_back(rep);
    }
    {
      double kk1 = kk_real_from_imag(s, 1.0);
      double closed = susceptibility(s, 1.0).real();
      VerificationReport rep;
      rep.check_name = "kk_dispersion omega=1 " + describe(s);
      rep.expected = closed;
      rep.computed = kk1;
      rep.tolerance = 1e-4;
      rep.passed = rel_diff(kk1, closed) <= rep.tolerance;
      out.push_back(rep);
    }
    {
      double scale = detail::system_scale(s);
      ThermalContext ctx = make_thermal(1e3 * scale);
      out.push_back(classical_limit_check(s, ctx));
    }
    return out;
  };

  std::vector<std::future<std::vector<VerificationReport>>> futures;
  for (const auto& k : kernels)
    for (const auto& b : bodies) {
      SystemModel s = make_system(b.mass, b.omega0, k);
      futures.push_back(std::async(std::launch::async, run_one, s));
    }
  std::vector<VerificationReport> all;
  for (auto& f : futures) {
    auto part = f.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace qpart

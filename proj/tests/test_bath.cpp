#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "qpart/bath.hpp"

using namespace qpart;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("midpoint discretization reproduces the coupling rule") {
  // One mode on [0, 10]: omega_1 = 5, J(5) = 5 * 100/125 = 4 for Drude(1, 10),
  // c_1^2 = (2/pi) * 5 * 4 * 10 = 400/pi.
  auto s = make_system(1.0, 1.0, make_kernel(KernelModel::Drude, 1.0, 10.0));
  auto bath = build_bath(s, BathSpec{1, 10.0, true});
  REQUIRE(bath.bath_frequencies.size() == 1);
  CHECK(bath.bath_frequencies[0] == 5.0);
  CHECK(bath.bath_masses[0] == 1.0);
  CHECK(bath.couplings[0] * bath.couplings[0] ==
        doctest::Approx(400.0 / kPi).epsilon(1e-14));
  CHECK(bath.counter_term);

  auto b4 = build_bath(s, BathSpec{4, 10.0, true});
  REQUIRE(b4.bath_frequencies.size() == 4);
  CHECK(b4.bath_frequencies[0] == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(b4.bath_frequencies[3] == doctest::Approx(8.75).epsilon(1e-15));
}

TEST_CASE("bath construction validation") {
  auto s = make_system(1.0, 1.0, make_kernel(KernelModel::Drude, 1.0, 10.0));
  CHECK_THROWS_AS(build_bath(s, BathSpec{0, 10.0, true}), ConfigError);
  CHECK_THROWS_AS(build_bath(s, BathSpec{10, 0.0, true}), ConfigError);
  auto sfree = make_system(1.0, 0.0, make_kernel(KernelModel::Drude, 1.0, 10.0));
  CHECK_THROWS_AS(build_bath(sfree, BathSpec{10, 10.0, true}), ConfigError);
  try {
    build_bath(sfree, BathSpec{10, 10.0, true});
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("epsilon") != std::string::npos);
  }
}

TEST_CASE("two-by-two normal modes against the hand-solved fixture") {
  // V = [[1.25, -1], [-1, 4]] from omega0 = 1, omega_1 = 2, c = 1, M = m = 1.
  FiniteBath fb;
  fb.system_mass = 1.0;
  fb.omega0 = 1.0;
  fb.bath_frequencies = {2.0};
  fb.couplings = {1.0};
  fb.bath_masses = {1.0};
  fb.counter_term = true;
  auto nm = normal_modes(fb);
  REQUIRE(nm.frequencies.size() == 2);
  CHECK(nm.frequencies[0] == doctest::Approx(0.96167363819960749815).epsilon(1e-12));
  CHECK(nm.frequencies[1] == doctest::Approx(2.0797076269495023464).epsilon(1e-12));
  CHECK(nm.weights[0] == doctest::Approx(0.90436804215159426161).epsilon(1e-12));
  CHECK(nm.weights[1] == doctest::Approx(0.09563195784840573839).epsilon(1e-12));
}

TEST_CASE("decoupled system reduces to the bare oscillator") {
  FiniteBath fb;
  fb.system_mass = 2.0;
  fb.omega0 = 1.5;
  auto nm = normal_modes(fb);
  REQUIRE(nm.frequencies.size() == 1);
  CHECK(nm.frequencies[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(nm.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  ThermalContext ctx = make_thermal(0.8);
  CHECK(exact_kinetic(nm, ctx) ==
        doctest::Approx(kinetic_per_mode(ctx, 1.5)).epsilon(1e-14));
}

TEST_CASE("normal mode invariants on randomized baths") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto loguni = [&](double lo, double hi) { return lo * std::pow(hi / lo, u01(rng)); };
  for (int trial = 0; trial < 20; ++trial) {
    KernelModel model = static_cast<KernelModel>(trial % 3);
    double wc = loguni(2.0, 30.0);
    auto s = make_system(loguni(0.3, 3.0), loguni(0.3, 3.0),
                         make_kernel(model, loguni(0.1, 10.0),
                                     model == KernelModel::StrictOhmic ? 0.0 : wc));
    std::size_t n = 50 + static_cast<std::size_t>(u01(rng) * 250);
    auto bath = build_bath(s, BathSpec{n, loguni(20.0, 100.0), true});
    auto nm = normal_modes(bath);
    REQUIRE(nm.frequencies.size() == n + 1);
    double sum = 0.0, prev = 0.0;
    for (std::size_t k = 0; k < nm.frequencies.size(); ++k) {
      CHECK(nm.weights[k] >= 0.0);
      CHECK(nm.frequencies[k] > 0.0);
      CHECK(nm.frequencies[k] >= prev);
      prev = nm.frequencies[k];
      sum += nm.weights[k];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("counter term fixes the determinant of the potential") {
  // With the counter term, det V = omega0^2 prod omega_n^2 independent of the
  // couplings, so sum log eigenvalues is known in closed form.
  auto s = make_system(1.3, 0.7, make_kernel(KernelModel::Drude, 2.0, 10.0));
  auto bath = build_bath(s, BathSpec{137, 80.0, true});
  auto nm = normal_modes(bath);
  double lhs = 0.0;
  for (double f : nm.frequencies) lhs += 2.0 * std::log(f);
  double rhs = 2.0 * std::log(s.omega0);
  for (double w : bath.bath_frequencies) rhs += 2.0 * std::log(w);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("dropping the counter term loses positive definiteness") {
  auto s = make_system(1.0, 1.0, make_kernel(KernelModel::Drude, 20.0, 10.0));
  BathSpec spec{200, 50.0, false};
  auto bath = build_bath(s, spec);
  CHECK_FALSE(bath.counter_term);
  CHECK_THROWS_AS(normal_modes(bath), NumericalError);
  try {
    normal_modes(bath);
  } catch (const NumericalError& e) {
    std::string msg = e.what();
    CHECK(msg.find("eigenvalue") != std::string::npos);
    CHECK(msg.find("counter term disabled") != std::string::npos);
  }
  spec.counter_term = true;
  CHECK_NOTHROW(normal_modes(build_bath(s, spec)));
}

TEST_CASE("finite bath satisfies classical equipartition at high temperature") {
  auto s = make_system(1.0, 1.0, make_kernel(KernelModel::Drude, 1.0, 10.0));
  auto nm = normal_modes(build_bath(s, BathSpec{400, 100.0, true}));
  double kT = 1e4;
  ThermalContext ctx = make_thermal(kT);
  CHECK(exact_kinetic(nm, ctx) == doctest::Approx(kT / 2.0).epsilon(1e-3));
}

TEST_CASE("oracle matches the continuum energy for the Drude oscillator") {
  auto s = make_system(1.0, 1.0, make_kernel(KernelModel::Drude, 1.0, 10.0));
  auto nm = normal_modes(build_bath(s, BathSpec{2000, 400.0, true}));
  ThermalContext ctx = make_thermal(1.0);
  double oracle = exact_kinetic(nm, ctx);
  double continuum = mean_kinetic_energy(s, ctx).kinetic_energy;
  CHECK(std::fabs(oracle - continuum) / oracle < 5e-3);
}

TEST_CASE("epsilon pinning approximates the free particle") {
  // The bath needs omega0 > 0; a pinning well below all other scales must
  // reproduce the free-particle energy. Frozen continuum reference at the
  // shared hard cutoff 200 for the strictly Ohmic kernel.
  auto so = make_kernel(KernelModel::StrictOhmic, 1.0);
  ThermalContext ctx = make_thermal(1.0);
  QuadSpec q;
  q.omega_max = 200.0;
  auto sfree = make_system(1.0, 0.0, so);
  double continuum = mean_kinetic_energy(sfree, ctx, q).kinetic_energy;
  CHECK(continuum == doctest::Approx(1.1051914118416286667).epsilon(1e-9));

  auto spinned = make_system(1.0, 1e-3, so);
  auto nm = normal_modes(build_bath(spinned, BathSpec{2000, 200.0, true}));
  double oracle = exact_kinetic(nm, ctx);
  CHECK(std::fabs(oracle - continuum) / continuum < 1e-2);

  // the pinning bias on the continuum side scales as epsilon^2
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  double efree = mean_kinetic_energy(make_system(1.0, 0.0, dr), ctx).kinetic_energy;
  double e2 = mean_kinetic_energy(make_system(1.0, 1e-2, dr), ctx).kinetic_energy;
  double e3 = mean_kinetic_energy(make_system(1.0, 1e-3, dr), ctx).kinetic_energy;
  CHECK(std::fabs(e2 - efree) == doctest::Approx(3.676e-6).epsilon(0.01));
  CHECK(std::fabs(e3 - efree) == doctest::Approx(3.676e-8).epsilon(0.01));
}

TEST_CASE("discrete partition histogram") {
  auto s = make_system(1.0, 2.0, make_kernel(KernelModel::Drude, 0.01, 10.0));
  auto nm = normal_modes(build_bath(s, BathSpec{500, 50.0, true}));
  auto hist = discrete_partition(nm, 0.25);
  // total mass is exactly one
  double mass = 0.0;
  for (double v : hist.values) mass += v * 0.25;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hist.tail_exponent == 0);
  CHECK_FALSE(hist.system.has_value());
  // at weak coupling the mass concentrates in the bin containing omega0
  std::size_t peak = 0;
  for (std::size_t i = 0; i < hist.values.size(); ++i)
    if (hist.values[i] > hist.values[peak]) peak = i;
  CHECK(std::fabs(hist.grid[peak] - 2.0) <= 0.25);

  CHECK_THROWS_AS(discrete_partition(nm, 0.0), ConfigError);
  CHECK_THROWS_AS(discrete_partition(nm, 1e9), ConfigError);
}

TEST_CASE("discrete partition converges to the continuum density") {
  // Free proxy: strict Ohmic, epsilon pinning, bins of width 0.5 compared to
  // the closed-form Lorentzian at bin centers.
  auto s = make_system(1.0, 1e-3, make_kernel(KernelModel::StrictOhmic, 1.0));
  auto sfree = make_system(1.0, 0.0, make_kernel(KernelModel::StrictOhmic, 1.0));
  auto nm = normal_modes(build_bath(s, BathSpec{1200, 60.0, true}));
  auto hist = discrete_partition(nm, 0.5);
  double worst = 0.0;
  for (std::size_t i = 0; i < hist.grid.size(); ++i) {
    double w = hist.grid[i];
    if (w < 0.5 || w > 15.0) continue;
    double ref = partition_value(sfree, w);
    worst = std::max(worst, std::fabs(hist.values[i] - ref) / ref);
  }
  CHECK(worst < 0.05);
}

TEST_CASE("normal modes input validation") {
  FiniteBath fb;
  fb.system_mass = 1.0;
  fb.omega0 = 0.0;
  CHECK_THROWS_AS(normal_modes(fb), ConfigError);
  fb.omega0 = 1.0;
  fb.bath_frequencies = {1.0, 2.0};
  fb.couplings = {0.5};
  CHECK_THROWS_AS(normal_modes(fb), ConfigError);
  fb.couplings = {0.5, 0.5};
  fb.bath_masses = {1.0, -1.0};
  CHECK_THROWS_AS(normal_modes(fb), ConfigError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qpart/response.hpp"

using namespace qpart;

namespace {

SystemModel so_free() { return make_system(1.0, 0.0, make_kernel(KernelModel::StrictOhmic, 1.0)); }

std::vector<SystemModel> sample_systems() {
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  auto so = make_kernel(KernelModel::StrictOhmic, 0.8);
  auto ac = make_kernel(KernelModel::AlgebraicCutoff, 2.0, 5.0);
  return {make_system(1.0, 0.0, dr),  make_system(2.5, 0.0, so),  make_system(0.7, 0.0, ac),
          make_system(1.0, 1.0, dr),  make_system(2.5, 0.4, so),  make_system(0.7, 1.3, ac)};
}

}  // namespace

TEST_CASE("strict Ohmic free particle closed form") {
  // chi(w) = gamma0 (gamma0 + i w M) / (gamma0^2 + w^2 M^2); at M = gamma0 = 1,
  // w = 1: (1 + i)/2.
  auto s = so_free();
  auto c = susceptibility(s, 1.0);
  CHECK(c.real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.imag() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("static susceptibility equals the mass exactly") {
  for (const auto& s : sample_systems()) {
    auto c = susceptibility(s, 0.0);
    CHECK(c.real() == s.mass);
    CHECK(c.imag() == 0.0);
  }
}

TEST_CASE("reality condition chi(-w) = conj(chi(w))") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> uw(0.01, 50.0);
  for (const auto& s : sample_systems())
    for (int i = 0; i < 100; ++i) {
      double w = uw(rng);
      auto plus = susceptibility(s, w);
      auto minus = susceptibility(s, -w);
      CHECK(minus.real() == doctest::Approx(plus.real()).epsilon(1e-12));
      CHECK(minus.imag() == doctest::Approx(-plus.imag()).epsilon(1e-12));
    }
}

TEST_CASE("dissipation is nonnegative at positive frequencies") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uw(0.0, 300.0);
  for (const auto& s : sample_systems())
    for (int i = 0; i < 200; ++i) CHECK(susceptibility(s, uw(rng)).imag() >= 0.0);
}

TEST_CASE("the pinning can be removed continuously") {
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  auto free = make_system(1.3, 0.0, dr);
  auto nearly_free = make_system(1.3, 1e-5, dr);
  for (double w : {0.3, 1.0, 4.0}) {
    auto a = susceptibility(free, w);
    auto b = susceptibility(nearly_free, w);
    CHECK(std::abs(a - b) <= 1e-6 * std::abs(a));
  }
}

TEST_CASE("high-frequency decay of the dissipative part") {
  // chi''(w) ~ A / w^3 with A the friction tail amplitude, free and pinned.
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  double w = 1e3;
  for (const auto& s : {make_system(1.0, 0.0, dr), make_system(1.0, 1.0, dr)}) {
    double lhs = susceptibility(s, w).imag() * w * w * w;
    CHECK(lhs == doctest::Approx(100.0).epsilon(2e-2));
  }
}

TEST_CASE("imag_over_omega matches chi'' away from zero and is finite at zero") {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> uw(0.01, 80.0);
  for (const auto& s : sample_systems()) {
    for (int i = 0; i < 100; ++i) {
      double w = uw(rng);
      CHECK(imag_over_omega(s, w) * w ==
            doctest::Approx(susceptibility(s, w).imag()).epsilon(1e-12));
    }
    double v0 = imag_over_omega(s, 0.0);
    if (s.omega0 > 0.0)
      CHECK(v0 == 0.0);
    else
      CHECK(v0 == doctest::Approx(s.mass * s.mass / s.kernel.gamma0).epsilon(1e-15));
  }
}

TEST_CASE("imaginary axis closed forms") {
  auto so = make_kernel(KernelModel::StrictOhmic, 1.0);
  // free, M = gamma0 = 1 at w = 1: M g/(w M + g) = 1/2
  CHECK(susceptibility_imag_axis(make_system(1.0, 0.0, so), 1.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  // pinned, M = gamma0 = omega0 = 1 at w = 1: (1 + 1)/(2 + 1) = 2/3
  CHECK(susceptibility_imag_axis(make_system(1.0, 1.0, so), 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // Drude(1, 10) pinned at w = 1: g = 10/11, (1 + 10/11)/(2 + 10/11) = 21/32
  CHECK(susceptibility_imag_axis(make_system(1.0, 1.0, make_kernel(KernelModel::Drude, 1.0, 10.0)),
                                 1.0) == doctest::Approx(21.0 / 32.0).epsilon(1e-15));
  // AlgebraicCutoff(1, 10) free at w = 1: g = 5*21/121, g/(1 + g) = 105/226
  CHECK(susceptibility_imag_axis(
            make_system(1.0, 0.0, make_kernel(KernelModel::AlgebraicCutoff, 1.0, 10.0)), 1.0) ==
        doctest::Approx(0.46460176991150442478).epsilon(1e-15));
}

TEST_CASE("imaginary axis values are positive, bounded by M, and decreasing") {
  for (const auto& s : sample_systems()) {
    double prev = s.mass;
    for (double w : {0.1, 0.5, 1.0, 3.0, 10.0, 50.0}) {
      double v = susceptibility_imag_axis(s, w);
      CHECK(v > 0.0);
      CHECK(v <= s.mass * (1.0 + 1e-14));
      CHECK(v <= prev * (1.0 + 1e-14));
      prev = v;
    }
  }
  CHECK_THROWS_AS(susceptibility_imag_axis(so_free(), 0.0), DomainError);
  CHECK_THROWS_AS(susceptibility_imag_axis(so_free(), -1.0), DomainError);
}

TEST_CASE("partition tail exponents by kernel model") {
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  auto so = make_kernel(KernelModel::StrictOhmic, 1.0);
  auto ac = make_kernel(KernelModel::AlgebraicCutoff, 1.0, 10.0);
  CHECK(tail_exponent(make_system(1.0, 0.0, so)) == 2);
  CHECK(tail_exponent(make_system(1.0, 1.0, so)) == 2);
  CHECK(tail_exponent(make_system(1.0, 0.0, dr)) == 4);
  CHECK(tail_exponent(make_system(1.0, 1.0, dr)) == 4);
  CHECK(tail_exponent(make_system(1.0, 0.0, ac)) == 6);
  CHECK(tail_exponent(make_system(1.0, 1.0, ac)) == 6);
}

TEST_CASE("system construction validation") {
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  CHECK_THROWS_AS(make_system(0.0, 0.0, dr), ConfigError);
  CHECK_THROWS_AS(make_system(-1.0, 0.0, dr), ConfigError);
  CHECK_THROWS_AS(make_system(1.0, -0.5, dr), ConfigError);
  CHECK_NOTHROW(make_system(1.0, 0.0, dr));
}

TEST_CASE("free and oscillator dispatch agree where they overlap") {
  auto dr = make_kernel(KernelModel::Drude, 1.0, 10.0);
  auto sfree = make_system(1.7, 0.0, dr);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uw(0.01, 40.0);
  for (int i = 0; i < 50; ++i) {
    double w = uw(rng);
    auto a = susceptibility(sfree, w);
    auto b = susceptibility_free(sfree, w);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
  auto sosc = make_system(1.7, 0.9, dr);
  for (int i = 0; i < 50; ++i) {
    double w = uw(rng);
    auto a = susceptibility(sosc, w);
    auto b = susceptibility_oscillator(sosc, w);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
}

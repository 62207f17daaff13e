#pragma once

#include <string>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

struct VerificationReport {
  std::string check_name;
  double expected;
  double computed;
  double tolerance;  // relative to |expected|
  bool passed;
};

struct VerifyOptions {
  // Multiplies the 2/(pi M) prefactor of the sum-rule integrand. 1 is the
  // correct physics; mass (dropping the 1/M) is the deliberate regression
  // sabotage exercised by the negative test.
  double prefactor_scale = 1.0;
};

// chi'(omega) from the dispersion integral (2/pi) PV int_0^inf u chi''(u) /
// (u^2 - omega^2) du, evaluated with adaptive Simpson panels, a symmetric
// excision of half width delta = 1e-3 omega around the pole plus the local
// correction 2 delta h'(omega) + delta^3 h'''(omega) / 9 for
// h(u) = u chi''(u) / (u + omega), and a closed-form power tail. The result is
// computed at delta and delta/2; disagreement beyond 1e-8 raises AccuracyError.
double kk_real_from_imag(const SystemModel& s, double omega);

// (2 prefactor / (pi M)) int_0^inf chi''(w)/w dw against 1.
VerificationReport sum_rule_check(const SystemModel& s, const VerifyOptions& opt = {});

// (2/pi) int_0^inf u chi''(u) / (omega^2 + u^2) du against the closed-form
// chi(i omega).
VerificationReport imag_axis_identity(const SystemModel& s, double omega);

// Ek / (kB T / 2) against 1; requires kB T >= 100 hbar max(omega0, gamma0/M,
// omega_c). Tolerance 1e-2 from 100x, 1e-3 from 1000x.
VerificationReport classical_limit_check(const SystemModel& s, const ThermalContext& ctx);

// The full check matrix over the three kernel models and a mix of free and
// pinned systems with unit and non-unit masses; checks run concurrently and
// are reported in a fixed order.
std::vector<VerificationReport> default_suite(const VerifyOptions& opt = {});

}  // namespace qpart

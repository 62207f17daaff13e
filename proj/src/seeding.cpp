#include "seeding.hpp"

#include <algorithm>
#include <cmath>

namespace qpart::detail {

double system_scale(const SystemModel& s) {
  double sc = std::max(s.omega0, s.kernel.gamma0 / s.mass);
  if (s.kernel.model != KernelModel::StrictOhmic) sc = std::max(sc, s.kernel.omega_c);
  return sc;
}

bool resonance(const SystemModel& s, double* center, double* half_width) {
  if (!(s.omega0 > 0.0)) return false;
  double w = s.omega0;
  for (int it = 0; it < 3; ++it) {
    FrictionParts g = friction_parts(s.kernel, w);
    double wsq = s.omega0 * s.omega0 + w * g.b / s.mass;
    w = std::sqrt(std::max(wsq, 0.25 * s.omega0 * s.omega0));
  }
  *center = w;
  double a = friction_parts(s.kernel, w).a;
  *half_width = std::max(0.5 * a / s.mass, 1e-14 * w);
  return true;
}

std::vector<double> frequency_breakpoints(const SystemModel& s, double thermal_freq,
                                          double upper) {
  std::vector<double> pts;
  std::vector<double> scales;
  scales.push_back(s.kernel.gamma0 / s.mass);
  if (s.kernel.model != KernelModel::StrictOhmic) scales.push_back(s.kernel.omega_c);
  if (s.omega0 > 0.0) scales.push_back(s.omega0);
  if (thermal_freq > 0.0) scales.push_back(thermal_freq);
  for (double sc : scales) {
    pts.push_back(0.5 * sc);
    pts.push_back(sc);
    pts.push_back(2.0 * sc);
  }
  double c, hw;
  double finest = *std::min_element(scales.begin(), scales.end());
  if (resonance(s, &c, &hw)) {
    pts.push_back(c);
    for (double k = 1.0; k <= 1024.0; k *= 2.0) {
      pts.push_back(c - k * hw);
      pts.push_back(c + k * hw);
    }
    finest = std::min(finest, hw);
  }
  double x = std::max(1e-3 * finest, 1e-12 * upper);
  while (x < upper) {
    pts.push_back(x);
    x *= 2.0;
  }
  return pts;  // sorted and clipped by the integrators
}

}  // namespace qpart::detail

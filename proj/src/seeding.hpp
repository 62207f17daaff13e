#pragma once

#include <vector>

#include "qpart/response.hpp"

namespace qpart::detail {

// Characteristic frequency of the dissipative system (kernel scales included).
double system_scale(const SystemModel& s);

// Center and half-width of the resonance of chi''(w)/w for a pinned system,
// solved from M (w0^2 - w^2) + w b(w) = 0 by fixed-point iteration. Returns
// false for a free system.
bool resonance(const SystemModel& s, double* center, double* half_width);

// Quadrature seed points on (0, upper) covering every scale a chi-derived
// integrand can have: kernel scales, the thermal frequency, a cluster of
// points bracketing the resonance at dyadic multiples of its width, and a
// dyadic ladder so that no narrow feature hides inside one coarse panel.
std::vector<double> frequency_breakpoints(const SystemModel& s, double thermal_freq,
                                          double upper);

}  // namespace qpart::detail

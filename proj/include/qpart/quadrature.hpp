#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qpart/errors.hpp"

namespace qpart {

struct QuadResult {
  double value;
  double error;           // estimated absolute error
  std::size_t evaluations;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 4000;  // Gauss-Kronrod subdivision budget
  std::size_t max_depth = 60;        // Simpson recursion depth per segment
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. Interior breakpoints seed the
// initial panels (values outside (a, b) are ignored); the panel with the worst
// error estimate is bisected first, with deterministic tie-breaking. Throws
// AccuracyError when the budget is exhausted before the tolerance is met.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        const std::vector<double>& breakpoints, const QuadOptions& opt = {});

// Adaptive Simpson on [a, b] over the same kind of seeded segments. A distinct
// rule family from integrate_gk on purpose: verification quadratures must not
// share a rule with production ones.
QuadResult integrate_simpson(const std::function<double(double)>& f, double a, double b,
                             const std::vector<double>& breakpoints, const QuadOptions& opt = {});

// Closed-form tail of a power-law integrand: for f(u) ~ f(L) (L/u)^p beyond L,
// int_L^inf f du = f(L) L / (p - 1). Requires p > 1.
double power_tail(double f_at_L, double L, double p);

}  // namespace qpart

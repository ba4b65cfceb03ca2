#pragma once

#include <functional>

namespace vmi {

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
// Throws NumericError if the recursion depth limit is reached before the
// local error estimate falls under its share of tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9);

// ∫_0^x p(t) dt evaluated through the substitution t = u², which turns an
// integrable 1/sqrt(t) singularity at 0 (the chi-square density has one)
// into a bounded integrand. Requires 0 <= x <= 1.
double integrate_density_below(const std::function<double(double)>& p, double x,
                               double tol = 1e-9);

// ∫_0^1 t·p(t) dt with the same substitution.
double integrate_density_mean(const std::function<double(double)>& p,
                              double tol = 1e-9);

} // namespace vmi

#pragma once

#include <functional>

namespace kchi {

// Tanh-sinh (double-exponential) quadrature on (a, b). Handles integrable
// endpoint singularities; the integrand is never evaluated at a or b.
// Halves the step until successive levels agree to eps (relative).
//
// The three-argument form receives (x, x - a, b - x) with the endpoint
// distances computed without cancellation, so integrands singular at a
// nonzero endpoint keep full precision.
double tanh_sinh(const std::function<double(double, double, double)>& f,
                 double a, double b, double eps = 1e-13, int max_level = 12);

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double eps = 1e-13, int max_level = 12);

// Trapezoid rule with `nodes` panels on [a, b]; spectrally accurate for
// periodic integrands over a full period.
double trapezoid(const std::function<double(double)>& f, double a, double b,
                 int nodes);

}  // namespace kchi

#include "kchi/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace kchi {

double tanh_sinh(const std::function<double(double, double, double)>& f,
                 double a, double b, double eps, int max_level) {
    const double half = 0.5 * (b - a);
    const double pi_half = 0.5 * std::numbers::pi;
    // |t| beyond ~6.1 puts the endpoint distance below double underflow.
    const double tmax = 6.1;

    // delta = 1 - tanh(pi/2 sinh t) is kept in closed form so nodes can
    // approach the endpoints to ~1e-300 instead of saturating at ~1e-16.
    auto eval = [&](double t) -> double {
        const double u = pi_half * std::sinh(t);
        const double delta = 2.0 / (std::exp(2.0 * u) + 1.0);
        const double w = pi_half * std::cosh(t) * delta * (2.0 - delta);
        const double d = half * delta;          // distance to the near endpoint
        const double far = 2.0 * half - d;      // distance to the far endpoint
        double s = 0.0;
        if (t == 0.0) {
            s = f(a + d, d, far);
        } else {
            if (a + d < b) s += f(a + d, d, far);      // node near a
            if (b - d > a) s += f(b - d, far, d);      // node near b
        }
        const double v = s * w * half;
        return std::isfinite(v) ? v : 0.0;
    };

    double h = 1.0;
    double sum = eval(0.0);
    for (int k = 1; k * h <= tmax; ++k) sum += eval(k * h);
    double integral = h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= tmax; k += 2) add += eval(k * h);
        const double next = 0.5 * integral + h * add;
        if (level >= 3 &&
            std::abs(next - integral) <= eps * std::max(1.0, std::abs(next))) {
            return next;
        }
        integral = next;
    }
    return integral;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double eps, int max_level) {
    return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b,
                     eps, max_level);
}

double trapezoid(const std::function<double(double)>& f, double a, double b,
                 int nodes) {
    const double h = (b - a) / nodes;
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < nodes; ++i) s += f(a + i * h);
    return s * h;
}

}  // namespace kchi

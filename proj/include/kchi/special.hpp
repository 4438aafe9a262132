// Special functions: Gamma (Lanczos), log-Gamma, reciprocal Gamma on the
// whole real line, digamma, Bessel J0, binomials, and the two analytic
// identities the moment main terms rest on:
//
//   sum_{j>=0} Gamma(k+1)/((2j)! Gamma(k-2j+1)) binom(2j,j) 4^-j
//       = Gamma(2k+1) / (2^k Gamma(k+1)^2),
//
//   int_0^{pi/2} cos^{2mu}(t) dt = pi/2^{2mu+1} * Gamma(2mu+1)/Gamma(mu+1)^2.
//
// 1/Gamma at nonpositive integers is exactly 0, which truncates the first
// series for integer k. For non-integer k the series tail decays only
// polynomially, so the tail is evaluated in closed form: writing the
// reciprocal Gamma by reflection and Gamma(k+1)Gamma(2j-k)/Gamma(2j+1) as
// a Beta integral, the tail collapses to
//
//   sin(pi(k+1))/pi * int_0^1 (1-t)^k t^(-k-1) R_J(t) dt,
//
// where R_J(t) = 1/sqrt(1-t^2) - sum_{j<=J} binom(2j,j)(t/2)^{2j} is the
// remainder of the central-binomial generating function. That integral is
// done by tanh-sinh quadrature.

#pragma once

#include <cstdint>

namespace kchi {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// x in (0, 171.62) to stay below double overflow.
double gamma_fn(double x);
double log_gamma(double x);    // x > 0
// 1/Gamma(x), any real x; exactly 0 at x = 0, -1, -2, ...
double recip_gamma(double x);
double digamma(double x);      // x > 0

// Exact integer arithmetic for n <= 60, log-space beyond.
double binomial(uint64_t n, uint64_t k);
double log_binomial(uint64_t n, uint64_t k);

// Gamma(2k+1) / (2 Gamma(k+1)^2): the absolute-moment main-term constant.
double moment_main_constant(double kappa);

// Power-series J0, |z| <= 50.
double bessel_j0(double z);
// Oracle: (1/2pi) int_{-pi}^{pi} exp(iz cos(t)) dt by `nodes`-panel trapezoid.
double bessel_j0_integral(double z, int nodes = 10000);

struct IdentityResult {
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
};

IdentityResult prop_a1_check(double kappa, double tol);
IdentityResult trig_integral_check(double mu);   // pass at 1e-8

}  // namespace kchi

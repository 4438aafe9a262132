#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kchi/quadrature.hpp"
#include "kchi/special.hpp"

using namespace kchi;

constexpr double kPi = std::numbers::pi;

TEST_CASE("gamma closed forms and recurrence") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    for (double x = 0.5; x <= 50.0; x += 0.37) {
        CHECK(gamma_fn(x + 1.0) ==
              doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
    CHECK(std::exp(log_gamma(100.0)) ==
          doctest::Approx(gamma_fn(100.0)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(-1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(172.0), std::domain_error);
}

TEST_CASE("reciprocal gamma vanishes at the poles, matches elsewhere") {
    CHECK(recip_gamma(0.0) == 0.0);
    CHECK(recip_gamma(-1.0) == 0.0);
    CHECK(recip_gamma(-7.0) == 0.0);
    CHECK(recip_gamma(2.5) == doctest::Approx(1.0 / gamma_fn(2.5)).epsilon(1e-13));
    // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(recip_gamma(-0.5) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-12));
}

TEST_CASE("digamma") {
    CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
    CHECK(digamma(0.5) ==
          doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
    for (double x = 0.1; x < 20.0; x += 0.613)
        CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-12));
}

TEST_CASE("binomials") {
    CHECK(binomial(4, 2) == 6.0);
    CHECK(binomial(6, 3) == 20.0);
    CHECK(binomial(60, 30) == doctest::Approx(118264581564861424.0).epsilon(1e-15));
    CHECK(binomial(100, 50) ==
          doctest::Approx(std::exp(log_binomial(100, 50))).epsilon(1e-12));
    // main-term constant equals (1/2) binom(2k,k) at integer kappa
    CHECK(moment_main_constant(3.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(moment_main_constant(1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bessel j0 series vs integral oracle") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(2.0) == doctest::Approx(0.2238907791412357).epsilon(1e-12));
    for (double z : {0.5, 2.0, 5.0, 10.0}) {
        CHECK(std::abs(bessel_j0(z) - bessel_j0_integral(z)) <= 1e-10);
    }
    CHECK_THROWS_AS(bessel_j0(51.0), std::domain_error);
}

TEST_CASE("prop A.1 identity on the kappa grid at 1e-12") {
    for (double kappa : {0.0, 0.3, 0.5, 1.0, 1.7, 2.0, 2.5, 3.0, 4.25, 5.0}) {
        auto r = prop_a1_check(kappa, 1e-12);
        INFO("kappa=", kappa, " lhs=", r.lhs, " rhs=", r.rhs);
        CHECK(r.pass);
    }
    // closed values
    CHECK(prop_a1_check(0.0, 1e-12).lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(prop_a1_check(1.0, 1e-12).lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(prop_a1_check(2.0, 1e-12).rhs == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("trig integral identity") {
    for (double mu : {0.0, 0.5, 1.0, 2.5}) {
        auto r = trig_integral_check(mu);
        INFO("mu=", mu, " quad=", r.lhs, " closed=", r.rhs);
        CHECK(r.pass);
    }
    CHECK(trig_integral_check(0.0).rhs == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(trig_integral_check(0.5).rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trig_integral_check(1.0).rhs == doctest::Approx(kPi / 4).epsilon(1e-12));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    // int_0^1 dx/sqrt(x) = 2
    double v = tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0, 1);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-11));
    // int_0^2 dr/sqrt(4-r^2) = pi/2, singular at the far endpoint
    double w = tanh_sinh(
        [](double r, double, double db) { return 1.0 / std::sqrt(db * (2.0 + r)); },
        0, 2);
    CHECK(w == doctest::Approx(kPi / 2).epsilon(1e-11));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kchi/arith.hpp"
#include "kchi/spectral.hpp"

using namespace kchi;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GroupFunction random_gf(uint64_t p, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GroupFunction f{p, {}};
    f.values.resize(p - 1);
    for (auto& v : f.values) v = cd(u(rng), u(rng));
    return f;
}

double max_abs(const std::vector<cd>& a, const std::vector<cd>& b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_mod(const std::vector<cd>& a) {
    double m = 0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

TEST_CASE("orthogonality: constant function") {
    for (uint64_t p : {5ull, 7ull, 101ull, 257ull}) {
        GroupFunction f{p, std::vector<cd>(p - 1, cd(1, 0))};
        for (auto* s : {&f}) (void)s;
        Spectrum nv = dft_naive(f), fv = dft_fast(f);
        for (auto* s : {&nv, &fv}) {
            CHECK(std::abs((*s)[0] - cd(double(p - 1), 0)) < 1e-9 * p);
            for (size_t j = 1; j < p - 1; ++j) CHECK(std::abs((*s)[j]) < 1e-9 * p);
        }
    }
}

TEST_CASE("single term: indicator of a=1 (t=0)") {
    uint64_t p = 13;
    GroupFunction f{p, std::vector<cd>(p - 1, cd(0, 0))};
    f.values[0] = cd(1, 0);
    Spectrum s = dft_fast(f);
    for (size_t j = 0; j < p - 1; ++j) CHECK(std::abs(s[j] - cd(1, 0)) < 1e-12);
}

TEST_CASE("p=5, f(a)=e(a/5): S at j=2 is the quadratic Gauss sum sqrt(5)") {
    PrimeContext ctx(5);
    GroupFunction f{5, {}};
    f.values.resize(4);
    for (uint64_t t = 0; t < 4; ++t)
        f.values[t] = std::polar(1.0, kTwoPi * double(ctx.pow(t)) / 5.0);
    Spectrum s = dft_fast(f);
    CHECK(std::abs(s[2] - cd(std::sqrt(5.0), 0)) < 1e-12);
}

TEST_CASE("fast == naive on the exhaustive prime list") {
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull, 101ull, 257ull, 1009ull, 2003ull}) {
        GroupFunction f = random_gf(p, static_cast<uint32_t>(p));
        Spectrum nv = dft_naive(f), fv = dft_fast(f);
        double scale = std::sqrt(double(p - 1)) * max_mod(f.values);
        CHECK(max_abs(nv.values, fv.values) <= 1e-8 * scale);
    }
}

TEST_CASE("raw engine vs naive for every length 1..64 and both signs") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (size_t n = 1; n <= 64; ++n) {
        std::vector<cd> in(n);
        for (auto& v : in) v = cd(u(rng), u(rng));
        for (int sign : {+1, -1}) {
            auto a = dft_raw_naive(in, sign);
            auto b = dft_raw_fast(in, sign);
            CHECK(max_abs(a, b) <= 1e-10 * std::sqrt(double(n)) + 1e-12);
        }
    }
}

TEST_CASE("Parseval at p=10007") {
    GroupFunction f = random_gf(10007, 7);
    Spectrum s = dft_fast(f);
    CHECK(parseval_defect(f, s) <= 1e-9);
}

TEST_CASE("conjugation symmetry for real input") {
    for (uint64_t p : {13ull, 1009ull}) {
        std::mt19937 rng(static_cast<uint32_t>(p));
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        GroupFunction f{p, {}};
        f.values.resize(p - 1);
        for (auto& v : f.values) v = cd(u(rng), 0.0);
        Spectrum s = dft_fast(f);
        double scale = std::sqrt(double(p - 1)) * max_mod(f.values);
        for (size_t j = 1; j < p - 1; ++j)
            CHECK(std::abs(s[j] - std::conj(s[p - 1 - j])) <= 1e-9 * scale);
    }
}

TEST_CASE("smooth lengths take the mixed-radix path and agree with naive") {
    // 1008 = 2^4 * 3^2 * 7, 2002 has factor 11/13/7 -> bluestein, 4096 pow2
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (size_t n : {1008, 2002, 4096, 360, 735}) {
        std::vector<cd> in(n);
        for (auto& v : in) v = cd(u(rng), u(rng));
        auto a = dft_raw_naive(in, +1);
        auto b = dft_raw_fast(in, +1);
        CHECK(max_abs(a, b) <= 1e-8 * std::sqrt(double(n)));
    }
}

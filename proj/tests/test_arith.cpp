#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kchi/arith.hpp"

using namespace kchi;

namespace {

// trial-division oracle for primality
bool prime_oracle(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// extended-gcd oracle done independently (brute search is fine at test sizes)
uint64_t inv_oracle(uint64_t a, uint64_t p) {
    for (uint64_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    return 0;
}

}  // namespace

TEST_CASE("is_prime matches trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(10001));   // 73 * 137
    for (uint64_t n = 2; n <= 3000; ++n) CHECK(is_prime(n) == prime_oracle(n));
    CHECK(is_prime(1000003));
    CHECK(is_prime((1ull << 61) - 1));
    CHECK_FALSE(is_prime((1ull << 58) - 1));
}

TEST_CASE("build_context small primes") {
    PrimeContext c5(5);
    CHECK(c5.g() == 2);
    CHECK(c5.ind(2) == 1);
    CHECK(c5.ind(4) == 2);
    CHECK(c5.ind(3) == 3);
    CHECK(c5.ind(1) == 0);
    CHECK(c5.eps_p() == cd(1, 0));

    PrimeContext c7(7);
    CHECK(c7.g() == 3);
    CHECK(c7.ind(6) == 3);          // 3^3 = 27 = 6 mod 7
    CHECK(c7.eps_p() == cd(0, 1));
}

TEST_CASE("context rejects bad input") {
    CHECK_THROWS_AS(PrimeContext(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext(1), std::invalid_argument);
}

TEST_CASE("index tables are inverse bijections; legendre = Euler criterion") {
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull, 101ull, 257ull, 1009ull, 9973ull}) {
        PrimeContext ctx(p);
        std::set<uint64_t> seen;
        for (uint64_t a = 1; a < p; ++a) {
            CHECK(ctx.pow(ctx.ind(a)) == a);
            seen.insert(ctx.ind(a));
        }
        CHECK(seen.size() == p - 1);
        for (uint64_t t = 0; t < p - 1; ++t) CHECK(ctx.ind(ctx.pow(t)) == t);
        for (uint64_t a = 1; a < p; ++a) {
            uint64_t e = mod_pow(a, (p - 1) / 2, p);
            int euler = (e == 1) ? 1 : -1;
            CHECK(ctx.legendre(a) == euler);
        }
        CHECK(ctx.legendre(0) == 0);
        int want = (((p - 1) / 2) % 2 == 0) ? 1 : -1;
        CHECK(ctx.legendre_minus1() == want);
        // g^((p-1)/q) != 1 for each prime q | p-1
        for (auto [q, e] : factorize(p - 1)) {
            (void)e;
            CHECK(mod_pow(ctx.g(), (p - 1) / q, p) != 1);
        }
    }
}

TEST_CASE("mod_inv") {
    CHECK(mod_inv(1, 97) == 1);
    CHECK(mod_inv(2, 5) == 3);
    CHECK(mod_inv(4, 7) == inv_oracle(4, 7));
    CHECK_THROWS_AS(mod_inv(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(mod_inv(14, 7), std::invalid_argument);
    for (uint64_t p : {11ull, 1009ull}) {
        for (uint64_t a = 1; a < p; ++a) {
            uint64_t inv = mod_inv(a, p);
            CHECK((a * inv) % p == 1);
            CHECK(mod_inv(inv, p) == a);   // involution
        }
    }
}

TEST_CASE("character table basics") {
    PrimeContext ctx(13);
    // chi_0 is identically 1 on units
    for (uint64_t a = 1; a < 13; ++a) CHECK(ctx.chi(0, a) == cd(1, 0));
    // chi_j(-1) = (-1)^j
    for (uint64_t j = 0; j < 12; ++j) {
        cd v = ctx.chi(j, 12);
        CHECK(std::abs(v - cd(j % 2 == 0 ? 1 : -1, 0)) < 1e-12);
    }
    // multiplicativity spot check
    for (uint64_t j : {1ull, 5ull, 8ull}) {
        for (uint64_t a : {2ull, 3ull, 7ull}) {
            for (uint64_t b : {5ull, 11ull}) {
                cd lhs = ctx.chi(j, (a * b) % 13);
                cd rhs = ctx.chi(j, a) * ctx.chi(j, b);
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
        }
    }
}

#include "kchi/arith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kchi {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for every n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t q = 2; q * q <= n; q += (q == 2) ? 1 : 2) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) { n /= q; ++e; }
            out.emplace_back(q, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("mod_inv: zero residue");
    // extended gcd on (a, p)
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inv: input not invertible");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

uint64_t smallest_primitive_root(uint64_t p) {
    auto factors = factorize(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : factors) {
            (void)e;
            if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found (input not prime?)");
}

PrimeContext::PrimeContext(uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("PrimeContext: p must be an odd prime");
    g_ = smallest_primitive_root(p);

    const uint64_t n = p - 1;
    ind_.assign(p, 0);
    pow_.assign(n, 0);
    uint64_t x = 1;
    for (uint64_t t = 0; t < n; ++t) {
        pow_[t] = static_cast<uint32_t>(x);
        ind_[x] = static_cast<uint32_t>(t);
        x = mul_mod(x, g_, p);
    }

    leg_.assign(p, 0);
    for (uint64_t a = 1; a < p; ++a)
        leg_[a] = (ind_[a] % 2 == 0) ? 1 : -1;

    // e(i/n) by repeated multiplication, re-anchored with an exact polar
    // value every 1024 steps to bound drift.
    unit_.assign(n, cd(1, 0));
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(n);
    const cd step = std::polar(1.0, theta);
    for (uint64_t i = 1; i < n; ++i) {
        if (i % 1024 == 0)
            unit_[i] = std::polar(1.0, theta * static_cast<double>(i));
        else
            unit_[i] = unit_[i - 1] * step;
    }
}

}  // namespace kchi

// Modular arithmetic foundation: deterministic primality, primitive roots,
// index (discrete log) tables, Legendre symbol, modular inverse.
//
// A PrimeContext is the per-prime workspace every other module consumes:
// a primitive root g of p, the bijection ind/pow between (Z/pZ)^x and
// Z/(p-1)Z, the Legendre table, a unit-root table for character values
// chi_j(a) = e(j*ind(a)/(p-1)), and the quartic constant
// eps_p = 1 (p = 1 mod 4) or i (p = 3 mod 4).

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace kchi {

using cd = std::complex<double>;

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(uint64_t n);

// Trial division; returns (prime, exponent) pairs in increasing order.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m);

// Inverse of a mod p. Throws std::invalid_argument when a = 0 mod p.
uint64_t mod_inv(uint64_t a, uint64_t p);

// Smallest primitive root of the odd prime p.
uint64_t smallest_primitive_root(uint64_t p);

class PrimeContext {
public:
    // Throws std::invalid_argument unless p is an odd prime >= 3.
    explicit PrimeContext(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t g() const { return g_; }
    uint64_t order() const { return p_ - 1; }   // size of the character group

    // ind(a) = discrete log of a base g, a in [1, p-1].
    uint64_t ind(uint64_t a) const { return ind_[a]; }
    // pow(t) = g^t mod p, t in [0, p-2].
    uint64_t pow(uint64_t t) const { return pow_[t]; }
    // Legendre symbol of a in [0, p-1]: -1, 0, +1.
    int legendre(uint64_t a) const { return leg_[a]; }
    int legendre_minus1() const { return leg_[p_ - 1]; }

    cd eps_p() const { return (p_ % 4 == 1) ? cd(1, 0) : cd(0, 1); }

    // e(i/(p-1)) for i in [0, p-2].
    cd unit_root(uint64_t i) const { return unit_[i]; }
    // chi_j(a) = e(j*ind(a)/(p-1)), a nonzero mod p.
    cd chi(uint64_t j, uint64_t a) const {
        return unit_[mul_mod_order(j, ind_[a % p_])];
    }
    cd chi_bar(uint64_t j, uint64_t a) const { return std::conj(chi(j, a)); }
    // chi_j(-1) = (-1)^j: even characters are exactly the even j.
    bool even_char(uint64_t j) const { return (j & 1) == 0; }

    uint64_t mul_mod_order(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % (p_ - 1));
    }

private:
    uint64_t p_;
    uint64_t g_;
    std::vector<uint32_t> ind_;    // size p; ind_[0] unused
    std::vector<uint32_t> pow_;    // size p-1
    std::vector<int8_t> leg_;      // size p
    std::vector<cd> unit_;         // size p-1
};

}  // namespace kchi

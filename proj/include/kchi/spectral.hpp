// Simultaneous evaluation of S(chi_j) = sum_a f(a) chi_j(a) for all p-1
// characters chi_j = eta^j of (Z/pZ)^x.
//
// Writing a = g^t identifies the character sum with a length-(p-1)
// discrete Fourier transform of t -> f(g^t):
//
//     S(chi_j) = sum_t f(g^t) e(+jt/(p-1)).
//
// dft_naive is the O(n^2) reference; dft_fast runs a mixed-radix
// Cooley-Tukey transform when p-1 is 7-smooth and a Bluestein chirp-z
// transform otherwise, so any length is O(n log n).

#pragma once

#include <vector>

#include "kchi/arith.hpp"

namespace kchi {

// values[t] = f(g^t), length p-1.
struct GroupFunction {
    uint64_t p = 0;
    std::vector<cd> values;
};

// values[j] = S(chi_j), length p-1. chi_j is even iff j is even.
struct Spectrum {
    uint64_t p = 0;
    std::vector<cd> values;

    bool even(uint64_t j) const { return (j & 1) == 0; }
    size_t size() const { return values.size(); }
    const cd& operator[](size_t j) const { return values[j]; }
    cd& operator[](size_t j) { return values[j]; }
};

// Raw transforms of arbitrary length: out[j] = sum_t in[t] e(sign*jt/n).
std::vector<cd> dft_raw_naive(const std::vector<cd>& in, int sign);
std::vector<cd> dft_raw_fast(const std::vector<cd>& in, int sign);

Spectrum dft_naive(const GroupFunction& f);
Spectrum dft_fast(const GroupFunction& f);

// sum_j |S_j|^2 - n * sum_t |f_t|^2, relative to the Parseval scale.
double parseval_defect(const GroupFunction& f, const Spectrum& s);

}  // namespace kchi

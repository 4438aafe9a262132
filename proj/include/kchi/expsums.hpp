// The character-sum families over (Z/pZ)^x, each with a fast spectral
// path and an independent brute-force oracle:
//
//   K(chi)       = p^{-1/2} sum_a chi(a + a^-1)        (the K family)
//   tau(chi)     = sum_v chi(v) e(v/p)                 (Gauss sums)
//   J(chi1,chi2) = sum_v chi1(v) chi2(1-v)             (Jacobi sums)
//   Kl_k(n,p)    = p^{(1-k)/2} sum_{x1..xk = n} e((x1+..+xk)/p)
//   tau2(n,chi)  = sum_v chi(v) e(n v^2 / p)
//
// K rides on the solution count of a + 1/a = b: exactly 1 + phi(b^2-4)
// values of a per b, so the whole family is one DFT of that count table.
// Every member of the K family is reconciled against the Gauss-pair form
//   K(chi) = 2 chi(2) conj(tau(phi)) p^{-3/2} Re(tau(chi1) conj(tau(chi1 phi))),
// chi = chi1^2, at construction time.
//
// Hyper-Kloosterman values come from inverting
//   sum_n chi(n) Kl_k(n,p) = p^{(1-k)/2} tau(chi)^k
// over the character group (one length-(p-1) transform per rank), checked
// against the e(x/p)-convolution recursion for small p.
//
// identity_suite evaluates the twisted power-moment identities. The
// kloosterman-form variants equate
//   sum_chi conj(chi)(n) (tau(chi) conj(tau(chi phi)))^k   and
//   sum_chi conj(chi)(n) J(chi,phi)^k
// with (p-1) p^{k-1/2} Kl_k(n,p) (eps_p phi(-1))^k resp.
// (p-1) p^{(k-1)/2} Kl_k(n,p). Those right-hand sides are numerically
// false: expanding the left sides by orthogonality pins them to
//
//   sum_chi conj(chi)(n) (tau(chi) conj(tau(chi phi)))^k
//       = (p-1) (eps_p sqrt(p))^k S_k(n),
//   sum_chi conj(chi)(n) J(chi,phi)^k = (p-1) phi(-1)^k S_k(n),
//
// where S_k(n) = sum_{x1...xk = n} phi(x1-1)...phi(xk-1) is an integer
// (S_1(n) = phi(n-1)). The suite computes both variants: the
// kloosterman-form records are retained as stated and fail; the
// product-form records hold to full precision against an independent
// convolution oracle for S_k.

#pragma once

#include <string>
#include <vector>

#include "kchi/arith.hpp"
#include "kchi/spectral.hpp"

namespace kchi {

struct GaussTable {
    uint64_t p = 0;
    Spectrum tau;                       // tau[j] = tau(chi_j)

    cd tau_phi() const { return tau[(p - 1) / 2]; }
};

struct KFamily {
    uint64_t p = 0;
    Spectrum kvals;                     // kvals[j] = K(chi_j)
    std::vector<uint8_t> counts;        // counts[b] = #{a : a + 1/a = b}
    double reconcile_defect = 0;        // max |dft route - gauss-pair route|
};

struct HyperKlTable {
    int k = 0;
    uint64_t p = 0;
    std::vector<cd> vals;               // vals[n], n in [1, p-1]; vals[0] unused
    double convolution_defect = -1;     // filled when the oracle ran (p <= 101)
};

struct CheckRecord {
    std::string name;
    uint64_t p = 0;
    int k = 0;
    uint64_t n = 0;
    cd lhs, rhs;
    double abs_err = 0;
    double tol = 0;
    bool pass = false;
};

GaussTable gauss_table(const PrimeContext& ctx);

KFamily k_family(const PrimeContext& ctx);
KFamily k_family(const PrimeContext& ctx, const GaussTable& gauss);

// Brute-force oracle: p^{-1/2} sum_a chi_j(a + 1/a), O(p) per character.
cd k_value_direct(const PrimeContext& ctx, uint64_t j);

// eps_p phi(n) sqrt(p), the closed form of sum_v phi(v) e(nv/p).
cd quadratic_gauss(const PrimeContext& ctx, uint64_t n);
cd quadratic_gauss_direct(const PrimeContext& ctx, uint64_t n);

// Direct O(p) Jacobi sum J(chi_j1, chi_j2).
cd jacobi(const PrimeContext& ctx, uint64_t j1, uint64_t j2);
// J(chi_j, phi) for every j via one DFT of t -> phi(1 - g^t).
Spectrum jacobi_phi_spectrum(const PrimeContext& ctx);

HyperKlTable hyper_kloosterman(const PrimeContext& ctx, int k);
HyperKlTable hyper_kloosterman(const PrimeContext& ctx, int k, const GaussTable& gauss);
// Convolution oracle: Kl_1(n) = e(n/p), Kl_k(n) = p^{-1/2} sum_x e(x/p) Kl_{k-1}(n/x).
std::vector<cd> hyper_kl_convolution(const PrimeContext& ctx, int k);

// tau2(n, chi_j) for all j; requires gcd(n, p) = 1.
Spectrum tau2_table(const PrimeContext& ctx, uint64_t n);

// S_k(n) for all n by direct convolution over the group (integer oracle).
std::vector<int64_t> phi_shift_power_table(const PrimeContext& ctx, int k);

std::vector<CheckRecord> identity_suite(const PrimeContext& ctx, int kmax);

// |half-range twisted Gauss-pair sum| / (k p^{k+1/2} log p).
double lemma31_diagnostic(const PrimeContext& ctx, int k, uint64_t a);
double lemma31_diagnostic(const PrimeContext& ctx, int k, uint64_t a,
                          const GaussTable& gauss);

}  // namespace kchi

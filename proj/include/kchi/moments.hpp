// Character-twisted moments of the K family against their predicted
// main terms:
//
//   M_kappa(n,p) = sum*_chi chi(n) |K(chi)|^{2 kappa}
//       -> Gamma(2k+1)/(2 Gamma(k+1)^2) * Delta_n * p,   Delta_n = [n = +-1]
//
//   M_{k,l}(n,p) = sum*_chi chi(n) conj(K)^k K^l
//       -> eps_p^{k-l} binom(k+l,(k+l)/2) Delta_{n;k,l}/2 * p  (k+l even),
//          Delta_{n;k,l} = [2^k = +-2^l n mod p]
//
//   M_k*(p) = sum_{chi even nontrivial} (conj(chi)(2) K(chi) tau(phi)/sqrt p)^k
//       -> (1/2) binom(k,k/2) p for even k, bounded for odd k.
//
// Odd characters annihilate K, so all sums run over even nontrivial j.
// bound_ratio reports |error| against the stated error envelope.

#pragma once

#include <string>

#include "kchi/arith.hpp"
#include "kchi/expsums.hpp"

namespace kchi {

enum class MomentKind { abs, mixed, star };

struct MomentReport {
    uint64_t p = 0;
    MomentKind kind = MomentKind::abs;
    double kappa = 0;       // abs kind
    int k = 0, l = 0;       // mixed/star kinds
    uint64_t n = 1;
    cd computed;
    cd predicted_main;
    double abs_err = 0;
    double rel_err = 0;     // valid only when has_rel
    bool has_rel = false;
    double envelope = 0;    // paper error envelope
    double bound_ratio = 0; // abs_err / envelope
};

const char* moment_kind_name(MomentKind k);

MomentReport moment_abs(const PrimeContext& ctx, const KFamily& family,
                        double kappa, uint64_t n);

MomentReport moment_mixed(const PrimeContext& ctx, const KFamily& family,
                          int k, int l, uint64_t n);

MomentReport moment_star(const PrimeContext& ctx, const KFamily& family,
                         const GaussTable& gauss, int k);

}  // namespace kchi

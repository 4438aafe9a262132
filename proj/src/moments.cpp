#include "kchi/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kchi/reduce.hpp"
#include "kchi/special.hpp"

namespace kchi {

namespace {

// |K|^q as exp(q log|K|); an exact zero contributes exactly zero.
double abs_power(double m, double q) {
    if (m < 1e-300) return 0.0;
    return std::exp(q * std::log(m));
}

void finish(MomentReport& r) {
    r.abs_err = std::abs(r.computed - r.predicted_main);
    if (std::abs(r.predicted_main) > 0) {
        r.rel_err = r.abs_err / std::abs(r.predicted_main);
        r.has_rel = true;
    }
    r.bound_ratio = r.envelope > 0 ? r.abs_err / r.envelope : 0.0;
}

}  // namespace

const char* moment_kind_name(MomentKind k) {
    switch (k) {
        case MomentKind::abs: return "abs";
        case MomentKind::mixed: return "mixed";
        case MomentKind::star: return "star";
    }
    return "?";
}

MomentReport moment_abs(const PrimeContext& ctx, const KFamily& family,
                        double kappa, uint64_t n) {
    const uint64_t p = ctx.p();
    n %= p;
    if (!(kappa > 0)) throw std::invalid_argument("moment_abs: kappa > 0");
    if (n == 0) throw std::invalid_argument("moment_abs: n must be nonzero mod p");

    const double q = 2.0 * kappa;
    std::vector<cd> terms;
    terms.reserve((p - 3) / 2);
    for (uint64_t j = 2; j + 1 < p; j += 2)
        terms.push_back(ctx.chi(j, n) * abs_power(std::abs(family.kvals[j]), q));

    MomentReport r;
    r.p = p;
    r.kind = MomentKind::abs;
    r.kappa = kappa;
    r.n = n;
    r.computed = pairwise_sum(terms);
    const bool delta = (n == 1 || n == p - 1);
    r.predicted_main = delta ? moment_main_constant(kappa) * static_cast<double>(p)
                             : cd(0, 0);
    r.envelope = kappa * std::pow(4.0, kappa) * std::sqrt(static_cast<double>(p)) *
                 std::log(static_cast<double>(p));
    finish(r);
    return r;
}

MomentReport moment_mixed(const PrimeContext& ctx, const KFamily& family,
                          int k, int l, uint64_t n) {
    const uint64_t p = ctx.p();
    n %= p;
    if (k < 0 || l < 0 || k + l < 1)
        throw std::invalid_argument("moment_mixed: need k,l >= 0 and k+l >= 1");
    if (n == 0) throw std::invalid_argument("moment_mixed: n must be nonzero mod p");

    // conj(K)^k K^l = |K|^{k+l} e(i (l-k) arg K); for k = l this reduces
    // bit-for-bit to the abs-moment accumulation.
    const double q = static_cast<double>(k + l);
    const double rot = static_cast<double>(l - k);
    std::vector<cd> terms;
    terms.reserve((p - 3) / 2);
    for (uint64_t j = 2; j + 1 < p; j += 2) {
        const cd kv = family.kvals[j];
        const double mag = abs_power(std::abs(kv), q);
        const double phase = rot * std::arg(kv);
        terms.push_back(ctx.chi(j, n) * (mag * cd(std::cos(phase), std::sin(phase))));
    }

    MomentReport r;
    r.p = p;
    r.kind = MomentKind::mixed;
    r.kappa = 0;
    r.k = k;
    r.l = l;
    r.n = n;
    r.computed = pairwise_sum(terms);
    if ((k + l) % 2 == 0) {
        const uint64_t lhs = mod_pow(2, k, p);
        const uint64_t rhs = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(mod_pow(2, l, p)) * n) % p);
        const bool delta = (lhs == rhs) || (lhs == (p - rhs) % p);
        cd eps_pow(1, 0);
        {
            int d = ((k - l) % 4 + 4) % 4;
            for (int i = 0; i < d; ++i) eps_pow *= ctx.eps_p();
        }
        r.predicted_main = delta ? eps_pow *
                                       binomial(k + l, (k + l) / 2) *
                                       static_cast<double>(p) / 2.0
                                 : cd(0, 0);
    } else {
        r.predicted_main = cd(0, 0);
    }
    r.envelope = (k + l) * std::pow(2.0, k + l) *
                 std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p));
    finish(r);
    return r;
}

MomentReport moment_star(const PrimeContext& ctx, const KFamily& family,
                         const GaussTable& gauss, int k) {
    const uint64_t p = ctx.p();
    if (k < 1) throw std::invalid_argument("moment_star: k >= 1");

    const cd tau_phi = gauss.tau_phi();
    const double inv_root = 1.0 / std::sqrt(static_cast<double>(p));
    std::vector<cd> terms;
    terms.reserve((p - 3) / 2);
    for (uint64_t j = 2; j + 1 < p; j += 2) {
        cd base = ctx.chi_bar(j, 2) * family.kvals[j] * tau_phi * inv_root;
        cd pw(1, 0);
        for (int i = 0; i < k; ++i) pw *= base;
        terms.push_back(pw);
    }

    MomentReport r;
    r.p = p;
    r.kind = MomentKind::star;
    r.k = k;
    r.n = 1;
    r.computed = pairwise_sum(terms);
    r.predicted_main = (k % 2 == 0)
                           ? cd(0.5 * binomial(k, k / 2) * static_cast<double>(p), 0)
                           : cd(0, 0);
    r.envelope = k * std::pow(2.0, k) * std::sqrt(static_cast<double>(p)) *
                 std::log(static_cast<double>(p));
    finish(r);
    return r;
}

}  // namespace kchi

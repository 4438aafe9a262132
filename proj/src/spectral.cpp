#include "kchi/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kchi/reduce.hpp"

namespace kchi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// w[i] = e(sign * i / order) for i in [0, count): repeated multiplication,
// re-anchored with an exact polar every 1024 steps.
std::vector<cd> root_table(size_t count, size_t order, int sign) {
    std::vector<cd> w(count);
    const double theta = sign * kTwoPi / static_cast<double>(order);
    const cd step = std::polar(1.0, theta);
    w[0] = cd(1, 0);
    for (size_t i = 1; i < count; ++i) {
        if (i % 1024 == 0)
            w[i] = std::polar(1.0, theta * static_cast<double>(i));
        else
            w[i] = w[i - 1] * step;
    }
    return w;
}

std::vector<cd> unit_table(size_t n, int sign) { return root_table(n, n, sign); }

// In-place iterative radix-2 FFT, n a power of two.
void fft_pow2(std::vector<cd>& a, int sign) {
    const size_t n = a.size();
    if (n <= 1) return;
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const std::vector<cd> w = root_table(n / 2, n, sign);
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t stride = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                cd u = a[i + k];
                cd v = a[i + k + len / 2] * w[k * stride];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// Bluestein chirp-z: any length via one pow2 convolution of size >= 2n-1.
std::vector<cd> bluestein(const std::vector<cd>& in, int sign) {
    const size_t n = in.size();
    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    // chirp[k] = e(sign * k^2 / (2n)); k^2 reduced mod 2n in exact integers.
    std::vector<cd> chirp(n);
    const double base = sign * kTwoPi / (2.0 * static_cast<double>(n));
    const uint64_t two_n = 2 * n;
    for (size_t k = 0; k < n; ++k) {
        uint64_t q = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(k) * k) % two_n);
        chirp[k] = std::polar(1.0, base * static_cast<double>(q));
    }

    std::vector<cd> a(m, cd(0, 0)), b(m, cd(0, 0));
    for (size_t k = 0; k < n; ++k) a[k] = in[k] * chirp[k];
    b[0] = cd(1, 0);
    for (size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv_m = 1.0 / static_cast<double>(m);

    std::vector<cd> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = a[j] * inv_m * chirp[j];
    return out;
}

bool is_pow2(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<size_t> smooth_factors(size_t n) {
    std::vector<size_t> fs;
    for (size_t q : {2, 3, 5, 7}) {
        while (n % q == 0) { fs.push_back(q); n /= q; }
    }
    if (n != 1) fs.clear();   // not 7-smooth
    return fs;
}

// Recursive mixed-radix Cooley-Tukey; w = global unit table e(sign*i/N).
// Reads in[t * stride], writes out[0..n).
void ct_rec(const cd* in, size_t stride, cd* out, size_t n,
            const std::vector<size_t>& fs, size_t depth,
            const std::vector<cd>& w, size_t root_n) {
    if (n == 1) { out[0] = in[0]; return; }
    const size_t r = fs[depth];
    const size_t m = n / r;
    for (size_t t2 = 0; t2 < r; ++t2)
        ct_rec(in + t2 * stride, stride * r, out + t2 * m, m, fs, depth + 1, w, root_n);

    // combine: X[m*k2 + k1] = sum_{t2} (Y_{t2}[k1] * W_N^{t2*k1*stride}) * W_r^{t2*k2}
    const size_t big_stride = root_n / n;    // this level's twiddle step in w
    const size_t r_step = root_n / r;
    std::vector<cd> y(r), x(r);
    for (size_t k1 = 0; k1 < m; ++k1) {
        for (size_t t2 = 0; t2 < r; ++t2)
            y[t2] = out[t2 * m + k1] * w[(t2 * k1 * big_stride) % root_n];
        for (size_t k2 = 0; k2 < r; ++k2) {
            cd acc = y[0];
            for (size_t t2 = 1; t2 < r; ++t2)
                acc += y[t2] * w[(t2 * k2 * r_step) % root_n];
            x[k2] = acc;
        }
        for (size_t k2 = 0; k2 < r; ++k2) out[m * k2 + k1] = x[k2];
    }
}

std::vector<cd> mixed_radix(const std::vector<cd>& in, int sign,
                            const std::vector<size_t>& fs) {
    const size_t n = in.size();
    const std::vector<cd> w = unit_table(n, sign);
    std::vector<cd> out(n);
    ct_rec(in.data(), 1, out.data(), n, fs, 0, w, n);
    return out;
}

}  // namespace

std::vector<cd> dft_raw_naive(const std::vector<cd>& in, int sign) {
    const size_t n = in.size();
    const std::vector<cd> w = unit_table(n, sign);
    std::vector<cd> out(n);
    std::vector<cd> terms(n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t t = 0; t < n; ++t) {
            uint64_t idx = static_cast<uint64_t>(
                (static_cast<unsigned __int128>(j) * t) % n);
            terms[t] = in[t] * w[idx];
        }
        out[j] = pairwise_sum(terms);
    }
    return out;
}

std::vector<cd> dft_raw_fast(const std::vector<cd>& in, int sign) {
    const size_t n = in.size();
    if (n <= 1) return in;
    if (is_pow2(n)) {
        std::vector<cd> a = in;
        fft_pow2(a, sign);
        return a;
    }
    auto fs = smooth_factors(n);
    if (!fs.empty()) return mixed_radix(in, sign, fs);
    return bluestein(in, sign);
}

Spectrum dft_naive(const GroupFunction& f) {
    return Spectrum{f.p, dft_raw_naive(f.values, +1)};
}

Spectrum dft_fast(const GroupFunction& f) {
    return Spectrum{f.p, dft_raw_fast(f.values, +1)};
}

double parseval_defect(const GroupFunction& f, const Spectrum& s) {
    const size_t n = f.values.size();
    std::vector<double> lhs(n), rhs(n);
    for (size_t i = 0; i < n; ++i) {
        lhs[i] = std::norm(s.values[i]);
        rhs[i] = std::norm(f.values[i]);
    }
    double a = pairwise_sum(std::span<const double>(lhs));
    double b = static_cast<double>(n) * pairwise_sum(std::span<const double>(rhs));
    double scale = std::max(a, b);
    return scale > 0 ? std::abs(a - b) / scale : 0.0;
}

}  // namespace kchi

// Fixed-order reductions and a small deterministic parallel map.
//
// Every reduction in this project uses pairwise (tree) summation over a
// fixed index order, so results are bit-identical regardless of thread
// count. Parallel loops only ever partition work by index ranges and
// write to disjoint slots.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace kchi {

template <typename T>
T pairwise_sum(std::span<const T> v) {
    const size_t n = v.size();
    if (n == 0) return T{};
    if (n <= 16) {
        T s = v[0];
        for (size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const size_t h = n / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

// Number of worker threads: explicit request > KM_THREADS > hardware.
unsigned resolve_threads(unsigned requested);

// Runs fn(i) for i in [0, n) on `threads` workers, blocking until done.
// fn must only touch state owned by index i.
void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& fn);

}  // namespace kchi

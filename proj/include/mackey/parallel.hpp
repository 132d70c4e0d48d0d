#ifndef MACKEY_PARALLEL_HPP
#define MACKEY_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mackey {

// Worker count for quadrature slices: MACKEY_FIELD_THREADS wins, otherwise
// the hardware count, always at least one.
inline int worker_count() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("MACKEY_FIELD_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    return hw;
}

// Runs fn(i) for i in [0, n).  Each index owns its output slot, so results
// are identical for any worker count; the caller reduces the slots in index
// order afterwards.
template <typename Fn>
void parallel_slices(int n, Fn&& fn) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Pairwise reduction in a fixed order; keeps long sums reproducible and
// cuts cancellation error versus a running sum.
template <typename T>
T pairwise_sum(std::vector<T> v) {
    if (v.empty()) return T{};
    std::size_t n = v.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
        n = half;
    }
    return v[0];
}

} // namespace mackey

#endif

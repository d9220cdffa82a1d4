#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chaoslab {

inline int worker_count() {
    static int n = [] {
        if (const char* env = std::getenv("CHAOSLAB_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }();
    return n;
}

// Static block partition over [begin, end). Work items must write only to
// their own index so the result is independent of the worker count.
template <typename Fn>
void parallel_for(std::int64_t begin, std::int64_t end, Fn&& fn, std::int64_t min_grain = 1) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    int nw = worker_count();
    if (min_grain > 1) nw = static_cast<int>(std::min<std::int64_t>(nw, (total + min_grain - 1) / min_grain));
    if (nw <= 1) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    const std::int64_t chunk = (total + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const std::int64_t lo = begin + w * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::int64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace chaoslab

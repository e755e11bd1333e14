#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace packmeasure {

// Worker count: PACKMEASURE_THREADS caps the pool; 0/unset means hardware
// concurrency.
inline std::size_t worker_count() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PACKMEASURE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && static_cast<std::size_t>(v) < hw) return static_cast<std::size_t>(v);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return hw;
}

// Static block partition of [0, count). Each index is processed exactly once;
// results must be written to disjoint slots so the outcome is identical for
// any worker count.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    std::size_t workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (workers > count) workers = count;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = lo + chunk < count ? lo + chunk : count;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace packmeasure

#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qfx {

// Index-sharded loop; results land in caller-indexed slots, so the merge
// order never depends on thread timing.
inline void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned workers = jobs;
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qfx

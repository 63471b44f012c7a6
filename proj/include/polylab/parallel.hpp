#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace polylab {

// Worker cap: POLYLAB_THREADS if set, else the hardware count, at least 1.
inline int max_threads() {
    static int cached = [] {
        if (const char* env = std::getenv("POLYLAB_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? (int)hw : 1;
    }();
    return cached;
}

// Static stripe partition so results do not depend on the thread count.
inline void parallel_for(long long begin, long long end,
                         const std::function<void(long long, long long)>& body) {
    long long total = end - begin;
    int workers = (int)std::min<long long>(max_threads(), std::max<long long>(total, 1));
    if (workers <= 1 || total < 2) {
        body(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    long long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long lo = begin + w * chunk;
        long long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace polylab

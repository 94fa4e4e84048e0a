#include "supersplit/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace supersplit {

int thread_limit() {
    if (const char* env = std::getenv("SUPERSPLIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    const int workers = std::min(thread_limit(), count);
    if (workers <= 1) {
        for (int k = begin; k < end; ++k) fn(k);
        return;
    }
    std::atomic<int> next{begin};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int k = next.fetch_add(1); k < end; k = next.fetch_add(1)) fn(k);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace supersplit

#include "rcnn/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace rcnn {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() {
    int n = g_threads.load();
    if (n == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        n = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return n;
}

void parallel_for(int begin, int end, const std::function<void(int, int)>& body) {
    int total = end - begin;
    if (total <= 0)
        return;
    int workers = std::min(thread_count(), total);
    if (workers <= 1) {
        body(begin, end);
        return;
    }
    int chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) {
        int lo = begin + w * chunk;
        int hi = std::min(end, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back(body, lo, hi);
    }
    body(begin, std::min(end, begin + chunk));
    for (auto& t : pool)
        t.join();
}

}  // namespace rcnn

#ifndef MORSEGRAD_PARALLEL_HPP
#define MORSEGRAD_PARALLEL_HPP

#include <algorithm>
#include <thread>
#include <vector>

namespace morsegrad {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers must write
// only to disjoint slots; results are then independent of the schedule.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
    threads = std::min(std::max(threads, 1), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([t, n, threads, &fn] {
            for (int i = t; i < n; i += threads) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

} // namespace morsegrad

#endif

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cohkit {

// Runs fn(i) for i in [0, n). Each index is processed exactly once; callers
// own determinism by writing results into per-index slots and reducing in
// index order afterwards.
template <typename Fn>
void parallel_for_index(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) {
            threads = 1;
        }
    }
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::size_t workers = std::min<std::size_t>(threads, n);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) {
                    return;
                }
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
}

}  // namespace cohkit

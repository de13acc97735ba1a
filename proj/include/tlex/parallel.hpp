#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace tlex {

// Index-parallel loop with deterministic output: workers pull indices from
// a shared counter and write only to their own slot, so results are
// independent of scheduling. threads == 0 picks the hardware count.
template <typename Fn>
void parallel_for(size_t n, const Fn& fn, unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned count = static_cast<unsigned>(std::min<size_t>(threads, n));
    pool.reserve(count - 1);
    for (unsigned t = 0; t + 1 < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace tlex

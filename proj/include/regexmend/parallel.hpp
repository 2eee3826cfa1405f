#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace regexmend {

// Worker cap: explicit request, else REGEXMEND_THREADS, else the hardware count.
inline unsigned resolve_threads(unsigned requested) {
    unsigned n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("REGEXMEND_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) n = static_cast<unsigned>(v);
        }
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, n), fanning out to `threads` workers. Results must
// be written into pre-sized slots so the outcome is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace regexmend

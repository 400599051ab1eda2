#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace giuga {

/// Runs fn(i) for i in [begin, end) across a small thread pool. fn must be
/// safe to call concurrently for distinct i. jobs == 0 uses hardware
/// concurrency; jobs == 1 runs inline.
template <class Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, Fn&& fn, unsigned jobs = 0) {
    if (begin >= end) return;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs == 1 || end - begin == 1) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{begin};
    auto work = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < end; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(jobs, end - begin));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

} // namespace giuga

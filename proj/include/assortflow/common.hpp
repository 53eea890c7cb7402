#pragma once

#include <atomic>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace assortflow {

// Raised on malformed user input (CLI maps it to exit code 2).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a request is well-formed but outside the supported problem
// class, e.g. DA planning with a non-IFR demand (CLI exit code 3).
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

inline uint64_t splitmix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent stream per (seed, stream_id); replication results do not
// depend on how replications are spread over threads.
inline std::mt19937_64 rng_stream(uint64_t seed, uint64_t stream_id) {
    uint64_t s = splitmix64(seed ^ splitmix64(stream_id));
    return std::mt19937_64(s);
}

// Runs fn(block_index) for every block on up to `threads` threads. Blocks are
// claimed dynamically; fn must not touch another block's state.
template <typename Fn>
void parallel_blocks(std::size_t num_blocks, int threads, Fn&& fn) {
    if (threads <= 1 || num_blocks <= 1) {
        for (std::size_t b = 0; b < num_blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= num_blocks) return;
            fn(b);
        }
    };
    std::vector<std::thread> pool;
    std::size_t nt = std::min<std::size_t>(threads, num_blocks);
    for (std::size_t t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace assortflow

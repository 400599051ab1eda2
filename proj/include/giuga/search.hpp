#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "giuga/arith.hpp"

namespace giuga {

struct GiugaHit {
    std::uint64_t n = 0;
    Int k_min;
};

struct SearchOptions {
    std::uint64_t max_bound = 100'000'000; // refuse larger scans
    std::uint64_t segment_size = 1u << 20;
    unsigned jobs = 0;                     // 0 = hardware concurrency
    std::string checkpoint_path;           // empty = no checkpointing
    std::uint64_t checkpoint_interval = 8; // segments between checkpoint writes

    /// Called with each hit as its segment's results are committed, in
    /// ascending order of n.
    std::function<void(const GiugaHit&)> on_hit;

    /// Called as the completed frontier advances; returning false stops the
    /// scan after the current segment (the checkpoint, if any, is written).
    std::function<bool(std::uint64_t frontier)> on_progress;
};

struct SearchResult {
    std::uint64_t bound = 0;
    std::optional<Int> k_bound;   // k_min filter applied to hits, when any
    std::vector<GiugaHit> hits;   // ascending n
    std::uint64_t scanned = 0;    // integers covered: 2..frontier
    std::uint64_t frontier = 1;   // every n <= frontier has been examined
    bool complete = false;        // frontier reached bound
};

/// Every Giuga number <= bound with its minimal exponent multiplier.
/// Segmented smallest-prime-factor sieve; candidates surviving the sieve are
/// re-verified through the arbitrary-precision classification path.
/// Resumable through SearchOptions::checkpoint_path; a resumed run produces
/// the same result as an uninterrupted one.
/// Throws ResourceExhausted when bound exceeds max_bound, CorruptCheckpoint
/// when an existing checkpoint cannot be used.
SearchResult search_giuga(std::uint64_t bound, const SearchOptions& opts = {});

/// Members of G_k up to bound: Giuga numbers whose k_min divides k.
std::vector<std::uint64_t> search_gk(std::uint64_t bound, const Int& k,
                                     const SearchOptions& opts = {});

/// Numbers <= bound that are simultaneously Giuga and Carmichael, i.e.
/// counterexamples to Giuga's conjecture. Expected empty at any feasible
/// bound.
std::vector<std::uint64_t> scan_counterexamples(std::uint64_t bound,
                                                const SearchOptions& opts = {});

} // namespace giuga

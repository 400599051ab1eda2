#include "giuga/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "giuga/classify.hpp"
#include "giuga/power_sum.hpp"

namespace giuga {

namespace {

constexpr const char* kCheckpointMagic = "giuga-search/1";

std::vector<std::uint32_t> sieve_primes_upto(std::uint32_t limit) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

// Scans [lo, hi] and returns the n whose every prime factor p satisfies
// p || n and p | (n/p - 1). Such composite n are exactly the Giuga numbers;
// primes also slip through and are weeded out by the verification pass.
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<std::uint32_t>& primes) {
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint64_t> rem(len);
    std::vector<std::uint8_t> live(len, 1);
    for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;

    for (std::uint32_t p : primes) {
        const std::uint64_t p64 = p;
        if (p64 * p64 > hi) break;
        std::uint64_t first = (lo % p64 == 0) ? lo : lo + (p64 - lo % p64);
        for (std::uint64_t n = first; n <= hi; n += p64) {
            const std::size_t i = static_cast<std::size_t>(n - lo);
            if (!live[i]) continue;
            const std::uint64_t cofactor = n / p64;
            // p^2 | n, or p does not divide n/p - 1: n cannot be Giuga.
            if (cofactor % p64 == 0 || (cofactor - 1) % p64 != 0) {
                live[i] = 0;
                continue;
            }
            rem[i] /= p64;
        }
    }

    std::vector<std::uint64_t> candidates;
    for (std::size_t i = 0; i < len; ++i) {
        // Any leftover prime factor q > sqrt(n) would need q | n/q - 1 with
        // 0 < n/q - 1 < q, which is impossible; survivors factor completely.
        if (live[i] && rem[i] == 1)
            candidates.push_back(lo + i);
    }
    return candidates;
}

struct CheckpointState {
    std::uint64_t frontier = 1;
    std::vector<GiugaHit> hits;
};

CheckpointState read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CorruptCheckpoint("cannot open checkpoint " + path);
    CheckpointState state;
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointMagic)
        throw CorruptCheckpoint("checkpoint " + path + ": bad schema line");
    if (!std::getline(in, line))
        throw CorruptCheckpoint("checkpoint " + path + ": missing frontier");
    try {
        Int frontier = int_from_decimal(line);
        if (frontier < 1 || !frontier.fits_ulong_p())
            throw Error("frontier out of range");
        state.frontier = frontier.get_ui();
    } catch (const Error&) {
        throw CorruptCheckpoint("checkpoint " + path + ": bad frontier line");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string n_text, k_text;
        if (!(fields >> n_text >> k_text))
            throw CorruptCheckpoint("checkpoint " + path + ": bad hit record");
        try {
            Int n = int_from_decimal(n_text);
            if (!n.fits_ulong_p())
                throw Error("hit out of range");
            state.hits.push_back({n.get_ui(), int_from_decimal(k_text)});
        } catch (const Error&) {
            throw CorruptCheckpoint("checkpoint " + path + ": bad hit record");
        }
    }
    for (const auto& hit : state.hits)
        if (hit.n > state.frontier)
            throw CorruptCheckpoint("checkpoint " + path + ": hit beyond frontier");
    return state;
}

// Write-new-then-rename so an interrupted write never clobbers the old state.
void write_checkpoint(const std::string& path, std::uint64_t frontier,
                      const std::vector<GiugaHit>& hits) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw Error("cannot write checkpoint " + tmp);
        out << kCheckpointMagic << '\n' << frontier << '\n';
        for (const auto& hit : hits)
            out << hit.n << ' ' << to_decimal(hit.k_min) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error("cannot move checkpoint into place: " + ec.message());
}

} // namespace

SearchResult search_giuga(std::uint64_t bound, const SearchOptions& opts) {
    if (bound > opts.max_bound)
        throw ResourceExhausted("search bound " + std::to_string(bound) +
                                " exceeds configured max " + std::to_string(opts.max_bound));
    SearchResult result;
    result.bound = bound;

    CheckpointState state;
    if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path))
        state = read_checkpoint(opts.checkpoint_path);

    if (state.frontier >= bound) {
        result.frontier = bound;
        result.scanned = bound >= 2 ? bound - 1 : 0;
        for (const auto& hit : state.hits)
            if (hit.n <= bound) result.hits.push_back(hit);
        result.complete = true;
        return result;
    }

    const std::uint64_t base = std::max<std::uint64_t>(2, state.frontier + 1);
    const std::uint64_t seg = std::max<std::uint64_t>(1024, opts.segment_size);
    const std::uint64_t segment_count = (bound - base) / seg + 1;
    const std::uint32_t prime_limit =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(0xffffffffull,
            static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 2));
    const auto primes = sieve_primes_upto(prime_limit);

    unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, segment_count));

    std::vector<GiugaHit> hits = state.hits;
    std::uint64_t frontier = base - 1;
    std::uint64_t next_to_commit = 0;
    std::uint64_t committed_since_checkpoint = 0;
    std::map<std::uint64_t, std::pair<std::uint64_t, std::vector<GiugaHit>>> done;
    std::atomic<std::uint64_t> next_segment{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::exception_ptr worker_error;

    auto verify_candidates = [](const std::vector<std::uint64_t>& candidates) {
        std::vector<GiugaHit> out;
        for (std::uint64_t n : candidates) {
            Factorization f = factor(Int(static_cast<unsigned long>(n)));
            if (is_giuga(f))
                out.push_back({n, k_min(f)});
        }
        return out;
    };

    auto worker = [&]() {
        try {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::uint64_t s = next_segment.fetch_add(1);
                if (s >= segment_count) break;
                const std::uint64_t lo = base + s * seg;
                const std::uint64_t hi = std::min(bound, lo + seg - 1);
                auto segment_hits = verify_candidates(sieve_segment(lo, hi, primes));

                std::lock_guard<std::mutex> lock(mu);
                done.emplace(s, std::make_pair(hi, std::move(segment_hits)));
                while (!done.empty() && done.begin()->first == next_to_commit) {
                    auto& [hi_committed, committed_hits] = done.begin()->second;
                    for (auto& hit : committed_hits) {
                        if (opts.on_hit) opts.on_hit(hit);
                        hits.push_back(std::move(hit));
                    }
                    frontier = hi_committed;
                    done.erase(done.begin());
                    ++next_to_commit;
                    ++committed_since_checkpoint;
                    if (!opts.checkpoint_path.empty() &&
                        committed_since_checkpoint >= opts.checkpoint_interval) {
                        write_checkpoint(opts.checkpoint_path, frontier, hits);
                        committed_since_checkpoint = 0;
                    }
                    if (opts.on_progress && !opts.on_progress(frontier))
                        stop.store(true, std::memory_order_relaxed);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!worker_error) worker_error = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (worker_error)
        std::rethrow_exception(worker_error);

    if (!opts.checkpoint_path.empty())
        write_checkpoint(opts.checkpoint_path, frontier, hits);

    std::sort(hits.begin(), hits.end(),
              [](const GiugaHit& a, const GiugaHit& b) { return a.n < b.n; });
    result.hits = std::move(hits);
    result.frontier = frontier;
    result.scanned = frontier >= 2 ? frontier - 1 : 0;
    result.complete = frontier >= bound;
    return result;
}

std::vector<std::uint64_t> search_gk(std::uint64_t bound, const Int& k,
                                     const SearchOptions& opts) {
    if (k < 1)
        throw Error("search_gk: k must be >= 1");
    SearchResult all = search_giuga(bound, opts);
    std::vector<std::uint64_t> out;
    for (const auto& hit : all.hits) {
        if (!mpz_divisible_p(k.get_mpz_t(), hit.k_min.get_mpz_t()))
            continue;
        if (hit.n <= 2000) {
            // cheap enough to confirm small members against the literal sum
            Int n(static_cast<unsigned long>(hit.n));
            if (power_sum_naive({n, k * (n - 1), factor(n)}) != n - 1)
                throw Error("search_gk: literal congruence disagrees at n = " +
                            std::to_string(hit.n));
        }
        out.push_back(hit.n);
    }
    return out;
}

std::vector<std::uint64_t> scan_counterexamples(std::uint64_t bound,
                                                const SearchOptions& opts) {
    SearchResult all = search_giuga(bound, opts);
    std::vector<std::uint64_t> out;
    for (const auto& hit : all.hits) {
        Factorization f = factor(Int(static_cast<unsigned long>(hit.n)));
        if (is_carmichael(f))
            out.push_back(hit.n);
    }
    return out;
}

} // namespace giuga

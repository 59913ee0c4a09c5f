// Options shared by the backtracking searches and a deterministic
// prefix-partitioned job runner.
//
// Searches enumerate candidates depth first.  seed = 0 keeps the fixed
// digit order 1 < 2 < 3 at every depth; a nonzero seed shuffles the order
// per depth, reproducibly.  With several workers the candidate space is
// split into prefix jobs processed in enumeration order; the final result
// is always the one the sequential enumeration would have found first, so
// output is independent of the worker count.
#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace csf {

struct SearchOptions {
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

// Digit order for a given search depth under a seed.
std::array<char, 3> digit_order(std::uint64_t seed, std::size_t depth);

namespace detail {

// Runs jobs 0..njobs-1, each possibly producing a result; returns the
// result of the least-indexed producing job.  Jobs with a smaller index
// than the current best are always run to completion; larger ones are
// skipped once a better result exists.
template <class R, class Fn>
std::optional<R> run_jobs_least(std::size_t njobs, unsigned workers, Fn job) {
    if (njobs == 0) return std::nullopt;
    std::vector<std::optional<R>> results(njobs);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{njobs};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= njobs) return;
            if (i > best.load()) continue;
            std::optional<R> r = job(i);
            if (r) {
                results[i] = std::move(r);
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    unsigned n = workers == 0 ? 1u : workers;
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::size_t b = best.load();
    if (b >= njobs) return std::nullopt;
    return results[b];
}

}  // namespace detail
}  // namespace csf

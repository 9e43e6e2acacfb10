#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "coinduel/evolving.hpp"
#include "coinduel/markov.hpp"
#include "coinduel/multicoin.hpp"
#include "coinduel/rng.hpp"

namespace coinduel::mc {

struct SimReport {
    std::uint64_t runs = 0;
    std::uint64_t ties = 0;
    std::uint64_t p1_wins = 0;
    std::uint64_t p2_wins = 0;
    std::uint64_t capped = 0;
    double mean_turns = 0.0;
    double mean_turns_stderr = 0.0;
    double tie_rate = 0.0;
    double tie_rate_stderr = 0.0;
    std::uint64_t seed = 0;
};

namespace detail {

enum class RunResult { tie, p1_win, p2_win, capped };

struct RunOutcome {
    RunResult result;
    std::uint64_t turns;
};

struct Tallies {
    std::uint64_t ties = 0, p1 = 0, p2 = 0, capped = 0;
    std::uint64_t turns_sum = 0, turns_sq_sum = 0;

    void add(const RunOutcome& o) {
        switch (o.result) {
            case RunResult::tie: ++ties; break;
            case RunResult::p1_win: ++p1; break;
            case RunResult::p2_win: ++p2; break;
            case RunResult::capped: ++capped; break;
        }
        turns_sum += o.turns;
        turns_sq_sum += o.turns * o.turns;
    }
    void merge(const Tallies& o) {
        ties += o.ties;
        p1 += o.p1;
        p2 += o.p2;
        capped += o.capped;
        turns_sum += o.turns_sum;
        turns_sq_sum += o.turns_sq_sum;
    }
};

constexpr std::uint64_t kBatchRuns = 4096;

/// Runs are split into fixed batches; batch b always consumes RNG stream b
/// of the configured seed, so the aggregate is bit-identical for any thread
/// count or scheduling order.
template <class PerRun>
SimReport run_batched(std::uint64_t runs, std::uint64_t seed, int threads, PerRun per_run) {
    if (runs < 1) throw std::domain_error("simulate: runs must be >= 1");
    if (threads < 1) threads = 1;
    const std::uint64_t batches = (runs + kBatchRuns - 1) / kBatchRuns;

    Tallies total;
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next_batch{0};
    auto worker = [&]() {
        Tallies local;
        for (;;) {
            const std::uint64_t b = next_batch.fetch_add(1);
            if (b >= batches) break;
            rng::Xoshiro256StarStar gen(seed, b);
            const std::uint64_t begin = b * kBatchRuns;
            const std::uint64_t end = std::min(runs, begin + kBatchRuns);
            for (std::uint64_t r = begin; r < end; ++r) local.add(per_run(gen));
        }
        std::scoped_lock lock(merge_mutex);
        total.merge(local);
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SimReport rep;
    rep.runs = runs;
    rep.ties = total.ties;
    rep.p1_wins = total.p1;
    rep.p2_wins = total.p2;
    rep.capped = total.capped;
    rep.seed = seed;
    const double n = static_cast<double>(runs);
    rep.mean_turns = static_cast<double>(total.turns_sum) / n;
    const double var =
        std::max(0.0, static_cast<double>(total.turns_sq_sum) / n - rep.mean_turns * rep.mean_turns);
    rep.mean_turns_stderr = std::sqrt(var / n);
    rep.tie_rate = static_cast<double>(total.ties) / n;
    rep.tie_rate_stderr = std::sqrt(rep.tie_rate * (1.0 - rep.tie_rate) / n);
    return rep;
}

}  // namespace detail

/// Raw-turn simulation of the standard game: both coins are tossed every
/// turn, double-tail rounds included in the count.
inline SimReport simulate_standard(const markov::BiasedGame& game, std::uint64_t runs,
                                   std::uint64_t seed, int threads = 1) {
    const double p = game.p_heads.to_double();
    if (!(p > 0.0) || p > 1.0) throw std::domain_error("simulate_standard: need 0 < p_heads <= 1");
    const int i1 = game.start.i1, i2 = game.start.i2;
    return detail::run_batched(runs, seed, threads, [=](rng::Xoshiro256StarStar& gen) {
        int a = i1, b = i2;
        std::uint64_t turns = 0;
        while (a > 0 && b > 0) {
            ++turns;
            if (gen.bernoulli(p)) --a;
            if (gen.bernoulli(p)) --b;
        }
        detail::RunOutcome o{detail::RunResult::tie, turns};
        if (a == 0 && b == 0)
            o.result = detail::RunResult::tie;
        else if (b == 0)
            o.result = detail::RunResult::p1_win;
        else
            o.result = detail::RunResult::p2_win;
        return o;
    });
}

enum class MulticoinMode {
    stated,            // fresh coin tosses each round
    legacy_accumulate  // the per-round sum carries over between rounds
};

/// Two independent cumulative-sum walks per run; tie when the round counts
/// agree. Walks that breach the floor or outlast the horizon are capped;
/// whether a capped pair ties is the convention's call. Legacy mode
/// reproduces an accumulation variant in which each round re-adds the
/// running sum of all previous tosses, kept for forensic comparison.
inline SimReport simulate_multicoin(const multicoin::MulticoinGame& game,
                                    multicoin::TieConvention convention, std::uint64_t runs,
                                    std::uint64_t seed, int threads = 1,
                                    MulticoinMode mode = MulticoinMode::stated) {
    const std::vector<int> coins = game.coins.values;
    const int target = game.target, floor_cut = game.floor_cut, horizon = game.horizon;
    const bool legacy = mode == MulticoinMode::legacy_accumulate;

    // returns rounds played, or 0 if the walk was capped
    auto walk = [=](rng::Xoshiro256StarStar& gen, std::uint64_t& rounds_played) -> std::uint64_t {
        long total = 0, round_sum = 0;
        std::uint64_t count = 0;
        while (total < target) {
            if (count == static_cast<std::uint64_t>(horizon)) {
                return 0;
            }
            ++count;
            ++rounds_played;
            if (!legacy) round_sum = 0;
            for (int a : coins)
                if (gen.next() >> 63) round_sum += a;
            total += round_sum;
            if (total < floor_cut) return 0;
        }
        return count;
    };

    return detail::run_batched(runs, seed, threads, [=](rng::Xoshiro256StarStar& gen) {
        std::uint64_t rounds = 0;
        const std::uint64_t c1 = walk(gen, rounds);
        const std::uint64_t c2 = walk(gen, rounds);
        detail::RunOutcome o{detail::RunResult::capped, rounds};
        if (c1 == 0 || c2 == 0) {
            const bool both_capped = c1 == 0 && c2 == 0;
            if (both_capped && convention == multicoin::TieConvention::include_capped)
                o.result = detail::RunResult::tie;
            else
                o.result = detail::RunResult::capped;
        } else if (c1 == c2) {
            o.result = detail::RunResult::tie;
        } else if (c1 < c2) {
            o.result = detail::RunResult::p2_win;  // player 1 finished first
        } else {
            o.result = detail::RunResult::p1_win;
        }
        return o;
    });
}

/// Escalating-hazard game: both players draw fresh uniforms every round and
/// eat with probability 1 - exp(-lambda * (n - m + 1)) at stash size m.
inline SimReport simulate_evolving(const evolving::HazardGame& game, std::uint64_t runs,
                                   std::uint64_t seed, int threads = 1) {
    const int n = game.n;
    // p_by_count[m] = eating probability while holding m tokens
    std::vector<double> p_by_count(static_cast<std::size_t>(n + 1), 0.0);
    for (int m = 1; m <= n; ++m)
        p_by_count[static_cast<std::size_t>(m)] = evolving::heads_probability(n, m, game.lambda);

    return detail::run_batched(runs, seed, threads, [=](rng::Xoshiro256StarStar& gen) {
        int a = n, b = n;
        std::uint64_t turns = 0;
        while (a > 0 && b > 0) {
            ++turns;
            if (gen.bernoulli(p_by_count[static_cast<std::size_t>(a)])) --a;
            if (gen.bernoulli(p_by_count[static_cast<std::size_t>(b)])) --b;
        }
        detail::RunOutcome o{detail::RunResult::tie, turns};
        if (a == 0 && b == 0)
            o.result = detail::RunResult::tie;
        else if (b == 0)
            o.result = detail::RunResult::p1_win;
        else
            o.result = detail::RunResult::p2_win;
        return o;
    });
}

struct CurvePoint {
    double p;
    double tie_rate;
    double tie_rate_stderr;
    double exact_tie;
};

/// Simulated tie rate across a grid of head probabilities for symmetric
/// starts (k, k), with the exact DP value attached per point. Point i uses
/// RNG streams of sub-seed splitmix64(seed, i) so the grid is seedable as a
/// unit.
inline std::vector<CurvePoint> tie_curve_vs_p(int k, std::span<const Rational> p_grid,
                                              std::uint64_t runs, std::uint64_t seed,
                                              int threads = 1) {
    std::vector<CurvePoint> out;
    out.reserve(p_grid.size());
    std::uint64_t sub = seed;
    for (const Rational& p : p_grid) {
        const std::uint64_t point_seed = rng::splitmix64(sub);
        const markov::BiasedGame game{exact::StartCounts(k, k), p};
        const SimReport rep = simulate_standard(game, runs, point_seed, threads);
        out.push_back({p.to_double(), rep.tie_rate, rep.tie_rate_stderr,
                       markov::tie_prob_dp(k, k, p).to_double()});
    }
    return out;
}

}  // namespace coinduel::mc

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "coinduel/rational.hpp"

namespace coinduel::multicoin {

constexpr int kMaxCoins = 24;  // 2^m subset enumeration bound

/// Fair coins with integer values: heads on coin i changes the cumulative
/// sum by values[i], tails does nothing.
struct CoinSet {
    std::vector<int> values;

    explicit CoinSet(std::vector<int> v) : values(std::move(v)) {
        if (values.empty()) throw std::domain_error("CoinSet: need at least one coin");
        for (int a : values)
            if (a == 0) throw std::domain_error("CoinSet: coin values must be nonzero");
    }
    int size() const { return static_cast<int>(values.size()); }
    bool zero_sum() const { return std::accumulate(values.begin(), values.end(), 0) == 0; }
};

/// Integer-supported PMF with an explicit residual bucket for mass that the
/// cap (floor breach or horizon) left unresolved. Exact: support + residual
/// always sums to 1.
struct Pmf {
    std::map<long long, Rational> support;
    Rational residual;

    Rational total() const {
        Rational t = residual;
        for (const auto& [_, mass] : support) t += mass;
        return t;
    }
};

/// One player's walk: cumulative sum starts at 0, terminates on reaching
/// target; trajectories that dip below floor or outlast horizon are capped.
struct MulticoinGame {
    CoinSet coins;
    int target;
    int floor_cut;
    int horizon;

    MulticoinGame(CoinSet c, int tgt, int floor_value, int h)
        : coins(std::move(c)), target(tgt), floor_cut(floor_value), horizon(h) {
        if (target < 1) throw std::domain_error("MulticoinGame: target must be >= 1");
        if (floor_cut >= 0) throw std::domain_error("MulticoinGame: floor must be negative");
        if (horizon < 1) throw std::domain_error("MulticoinGame: horizon must be >= 1");
    }
    MulticoinGame(CoinSet c, int tgt)
        : MulticoinGame(CoinSet(c), tgt, kDefaultFloor, default_horizon(tgt, c.size())) {}

    static constexpr int kDefaultFloor = -1000;
    static int default_horizon(int target, int m) { return 10 * target * m; }
};

enum class TieConvention {
    exclude_capped,  // capped runs never tie
    include_capped,  // two capped runs count as a tie
};

namespace detail {

/// Per-round increment distribution as subset counts over 2^m, built coin
/// by coin so only distinct sums are stored.
inline std::map<int, unsigned long> increment_counts(const CoinSet& coins) {
    if (coins.size() > kMaxCoins)
        throw std::domain_error("increment distribution: more than 24 coins; use Monte Carlo");
    std::map<int, unsigned long> counts{{0, 1}};
    for (int a : coins.values) {
        std::map<int, unsigned long> next;
        for (const auto& [sum, c] : counts) {
            next[sum] += c;      // tails
            next[sum + a] += c;  // heads
        }
        counts.swap(next);
    }
    return counts;
}

}  // namespace detail

/// Exact distribution of one round's total change, each of the 2^m
/// heads-subsets carrying mass (1/2)^m.
inline Pmf increment_pmf(const CoinSet& coins) {
    const auto counts = detail::increment_counts(coins);
    const BigInt den = BigInt::pow(2, static_cast<unsigned long>(coins.size()));
    Pmf out;
    for (const auto& [sum, c] : counts) out.support[sum] = Rational(BigInt(static_cast<long>(c)), den);
    out.residual = 0;
    return out;
}

/// The game with every coin value negated.
inline CoinSet dual(const CoinSet& coins) {
    std::vector<int> v(coins.values);
    for (int& a : v) a = -a;
    return CoinSet(std::move(v));
}

struct DualityReport {
    bool zero_sum;
    bool pmf_equal;
};

/// Checks the dual-game property: when the coin values sum to zero, a game
/// and its dual have identical per-round increment distributions (and hence
/// equal tie probabilities).
inline DualityReport duality_check(const CoinSet& coins) {
    const Pmf a = increment_pmf(coins);
    const Pmf b = increment_pmf(dual(coins));
    return {coins.zero_sum(), a.support == b.support};
}

/// Exact PMF of the first round at which the cumulative sum reaches the
/// target. Integer path-count DP over sums in [floor, target-1]: at round n
/// every count carries the implicit denominator 2^(m*n), so the per-state
/// work is pure bignum add-multiply. Capped trajectories (below floor, or
/// still alive at the horizon) land in the residual.
inline Pmf round_count_pmf(const MulticoinGame& game) {
    const auto counts_map = detail::increment_counts(game.coins);
    const std::vector<std::pair<int, unsigned long>> incs(counts_map.begin(), counts_map.end());
    const unsigned long m = static_cast<unsigned long>(game.coins.size());

    const int lo = game.floor_cut;
    const int hi = game.target - 1;
    const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<BigInt> cur(span), next(span);
    cur[static_cast<std::size_t>(-lo)] = 1;

    Pmf out;
    out.residual = 0;
    for (int n = 1; n <= game.horizon; ++n) {
        BigInt absorbed = 0, below = 0;
        for (auto& v : next) v = 0;
        for (std::size_t idx = 0; idx < span; ++idx) {
            if (cur[idx].is_zero()) continue;
            const int s = lo + static_cast<int>(idx);
            for (const auto& [inc, c] : incs) {
                const int ns = s + inc;
                if (ns >= game.target)
                    absorbed.add_mul(cur[idx], c);
                else if (ns < lo)
                    below.add_mul(cur[idx], c);
                else
                    next[static_cast<std::size_t>(ns - lo)].add_mul(cur[idx], c);
            }
        }
        const BigInt den = BigInt::pow(2, m * static_cast<unsigned long>(n));
        if (!absorbed.is_zero()) out.support[n] = Rational(absorbed, den);
        if (!below.is_zero()) out.residual += Rational(below, den);
        cur.swap(next);
    }

    BigInt alive = 0;
    for (const auto& v : cur) alive += v;
    if (!alive.is_zero())
        out.residual += Rational(alive, BigInt::pow(2, m * static_cast<unsigned long>(game.horizon)));
    return out;
}

/// Tie probability of the two-player game: both players run the same walk
/// independently, so P(tie) = sum_n P(N = n)^2, plus residual^2 when capped
/// pairs count as ties.
inline double tie_prob_multicoin(const MulticoinGame& game,
                                 TieConvention convention = TieConvention::exclude_capped) {
    const Pmf pmf = round_count_pmf(game);
    double acc = 0.0;
    for (const auto& [_, mass] : pmf.support) {
        const double p = mass.to_double();
        acc += p * p;
    }
    if (convention == TieConvention::include_capped) {
        const double r = pmf.residual.to_double();
        acc += r * r;
    }
    return acc;
}

}  // namespace coinduel::multicoin

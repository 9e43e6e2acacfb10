#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace coinduel::evolving {

/// Escalating-hazard game: a player holding m of n initial tokens eats with
/// probability 1 - exp(-lambda * (n - m + 1)) each round, so the hazard
/// rises as the stash shrinks.
struct HazardGame {
    int n;
    double lambda;

    HazardGame(int n_, double lambda_) : n(n_), lambda(lambda_) {
        if (n < 1) throw std::domain_error("HazardGame: n must be >= 1");
        if (!(lambda > 0.0)) throw std::domain_error("HazardGame: lambda must be > 0");
    }
};

inline double heads_probability(int n, int m, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("heads_probability: lambda must be > 0");
    if (m < 1 || m > n) throw std::domain_error("heads_probability: need 1 <= m <= n");
    return 1.0 - std::exp(-lambda * static_cast<double>(n - m + 1));
}

/// Success probabilities of the n geometric stages: eating the i-th token
/// (deficit level i) waits Geom(p_i) rounds with p_i = 1 - exp(-lambda * i).
inline std::vector<double> hazard_schedule(int n, double lambda) {
    if (n < 1) throw std::domain_error("hazard_schedule: n must be >= 1");
    if (!(lambda > 0.0)) throw std::domain_error("hazard_schedule: lambda must be > 0");
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = 1.0 - std::exp(-lambda * i);
    return p;
}

/// PMF over total rounds with the unresolved tail mass reported, dense over
/// [min_round, horizon()].
struct DensePmf {
    int min_round = 0;
    std::vector<double> mass;
    double residual = 0.0;

    int horizon() const { return min_round + static_cast<int>(mass.size()) - 1; }
    double mass_at(int t) const {
        const int i = t - min_round;
        return (i >= 0 && i < static_cast<int>(mass.size())) ? mass[static_cast<std::size_t>(i)] : 0.0;
    }
    double total() const {
        double s = 0.0;
        for (double v : mass) s += v;
        return s;
    }
    double mean() const {
        double s = 0.0;
        for (std::size_t i = 0; i < mass.size(); ++i) s += (min_round + static_cast<double>(i)) * mass[i];
        return s;
    }
};

/// Distribution of sum of independent geometrics (support >= 1 each) with
/// the given stage success probabilities. Each convolution with Geom(p) is
/// the O(H) recursion f'(t) = q f'(t-1) + p f(t-1); the horizon doubles
/// until the unresolved tail is at most eps.
inline DensePmf depletion_time_pmf(std::span<const double> stage_probs, double eps) {
    if (stage_probs.empty()) throw std::domain_error("depletion_time_pmf: empty schedule");
    if (!(eps > 0.0)) throw std::domain_error("depletion_time_pmf: eps must be > 0");
    for (double p : stage_probs)
        if (!(p > 0.0) || p > 1.0) throw std::domain_error("depletion_time_pmf: stage probabilities must be in (0, 1]");

    const int n = static_cast<int>(stage_probs.size());
    std::size_t horizon = static_cast<std::size_t>(std::max(2 * n, 64));
    for (;;) {
        std::vector<double> f(horizon + 1, 0.0), g(horizon + 1, 0.0);
        f[0] = 1.0;
        for (double p : stage_probs) {
            const double q = 1.0 - p;
            g[0] = 0.0;
            for (std::size_t t = 1; t <= horizon; ++t) g[t] = q * g[t - 1] + p * f[t - 1];
            f.swap(g);
        }
        double resolved = 0.0;
        for (std::size_t t = static_cast<std::size_t>(n); t <= horizon; ++t) resolved += f[t];
        const double residual = std::max(0.0, 1.0 - resolved);
        if (residual <= eps) {
            DensePmf out;
            out.min_round = n;
            out.mass.assign(f.begin() + n, f.end());
            out.residual = residual;
            return out;
        }
        horizon *= 2;
    }
}

inline DensePmf depletion_time_pmf(const HazardGame& game, double eps) {
    const auto p = hazard_schedule(game.n, game.lambda);
    return depletion_time_pmf(std::span<const double>(p), eps);
}

/// Exact tie probability: both depletion times are iid, so
/// P(tie) = sum_t P(N = t)^2 over the resolved support (absolute error at
/// most 2 * residual).
inline double tie_prob_evolving_exact(const HazardGame& game, double eps) {
    const DensePmf pmf = depletion_time_pmf(game, eps);
    double acc = 0.0;
    for (double v : pmf.mass) acc += v * v;
    return acc;
}

}  // namespace coinduel::evolving

#pragma once

#include <stdexcept>
#include <vector>

#include "coinduel/exact.hpp"
#include "coinduel/rational.hpp"

namespace coinduel::markov {

/// Two-player game with a common per-toss head probability p; p = 1/2
/// recovers the fair game.
struct BiasedGame {
    exact::StartCounts start;
    Rational p_heads;
};

struct OutcomeDist {
    Rational p1_wins;
    Rational p2_wins;
    Rational tie;
};

struct CompressedTransitions {
    Rational both;
    Rational only1;
    Rational only2;
};

/// Conditional move probabilities of the compressed game (rounds with at
/// least one head). With q = 1 - p: both = p/(1+q), each single = q/(1+q).
/// p = 0 is rejected: the uncompressed chain never progresses.
inline CompressedTransitions compressed_transitions(const Rational& p_heads) {
    if (p_heads.sign() <= 0 || p_heads > Rational(1))
        throw std::domain_error("compressed_transitions: need 0 < p_heads <= 1");
    const Rational q = Rational(1) - p_heads;
    const Rational denom = Rational(1) + q;
    return {p_heads / denom, q / denom, q / denom};
}

namespace detail {

/// Row-major lattice DP over states (i, j) = tokens remaining; absorbing
/// boundary at i = 0 or j = 0. Computes tie and both win probabilities in
/// one pass, all in exact rationals.
inline OutcomeDist outcome_dp(int i1, int i2, const Rational& p_heads) {
    if (i1 < 1 || i2 < 1) throw std::domain_error("outcome_dp: counts must be >= 1");
    const auto tr = compressed_transitions(p_heads);
    const int w = i2 + 1;
    std::vector<Rational> tie(static_cast<std::size_t>(i1 + 1) * w);
    std::vector<Rational> win1(tie.size());
    std::vector<Rational> win2(tie.size());
    auto at = [w](std::vector<Rational>& v, int i, int j) -> Rational& {
        return v[static_cast<std::size_t>(i) * w + j];
    };
    at(tie, 0, 0) = 1;
    for (int j = 1; j <= i2; ++j) at(win2, 0, j) = 1;  // player 1 depleted first
    for (int i = 1; i <= i1; ++i) at(win1, i, 0) = 1;  // player 2 depleted first
    for (int i = 1; i <= i1; ++i)
        for (int j = 1; j <= i2; ++j) {
            at(tie, i, j) = tr.both * at(tie, i - 1, j - 1) + tr.only1 * at(tie, i - 1, j) +
                            tr.only2 * at(tie, i, j - 1);
            at(win1, i, j) = tr.both * at(win1, i - 1, j - 1) + tr.only1 * at(win1, i - 1, j) +
                             tr.only2 * at(win1, i, j - 1);
            at(win2, i, j) = tr.both * at(win2, i - 1, j - 1) + tr.only1 * at(win2, i - 1, j) +
                             tr.only2 * at(win2, i, j - 1);
        }
    return {at(win1, i1, i2), at(win2, i1, i2), at(tie, i1, i2)};
}

}  // namespace detail

/// Exact tie probability for starting counts (i1, i2) and head probability p.
inline Rational tie_prob_dp(int i1, int i2, const Rational& p_heads) {
    return detail::outcome_dp(i1, i2, p_heads).tie;
}

inline OutcomeDist outcome_dist_dp(int i1, int i2, const Rational& p_heads) {
    return detail::outcome_dp(i1, i2, p_heads);
}

/// Exact expected raw turns for the fair game: 4/3 turns per compressed
/// state change, E(i,j) = 1 + (E(i-1,j-1) + E(i-1,j) + E(i,j-1)) / 3.
inline Rational expected_turns_dp(int i1, int i2) {
    if (i1 < 1 || i2 < 1) throw std::domain_error("expected_turns_dp: counts must be >= 1");
    const int w = i2 + 1;
    std::vector<Rational> e(static_cast<std::size_t>(i1 + 1) * w);
    const Rational third(1, 3);
    for (int i = 1; i <= i1; ++i)
        for (int j = 1; j <= i2; ++j)
            e[static_cast<std::size_t>(i) * w + j] =
                Rational(1) + third * (e[static_cast<std::size_t>(i - 1) * w + (j - 1)] +
                                       e[static_cast<std::size_t>(i - 1) * w + j] +
                                       e[static_cast<std::size_t>(i) * w + (j - 1)]);
    return Rational(4, 3) * e[static_cast<std::size_t>(i1) * w + i2];
}

}  // namespace coinduel::markov

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "coinduel/rational.hpp"

namespace coinduel::exact {

/// Initial token counts of the two players. The closed-form game-length
/// formula assumes i1 <= i2; normalized() provides that ordering (the game
/// is symmetric in the players).
struct StartCounts {
    int i1;
    int i2;

    StartCounts(int a, int b) : i1(a), i2(b) {
        if (a < 1 || b < 1) throw std::domain_error("StartCounts: counts must be >= 1");
    }
    StartCounts normalized() const { return i1 <= i2 ? *this : StartCounts(i2, i1); }
};

/// C(n, r) exactly; 0 when r < 0 or r > n.
inline BigInt binomial(long n, long r) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0");
    if (r < 0 || r > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

/// Exact tie probability of the fair symmetric game, both players starting
/// with k tokens, via the finite sum over the three-outcome compressed game:
///
///   sum_{n=0}^{k-1} C(2k-n-2, n) * C(2k-2n-2, k-n-1) * (1/3)^(2k-n-1)
///
/// Accumulated over the common denominator 3^(2k-1).
inline Rational tie_prob_finite(int k) {
    if (k < 1) throw std::domain_error("tie_prob_finite: k must be >= 1");
    BigInt num = 0;
    for (long n = 0; n <= k - 1; ++n) {
        BigInt term = binomial(2l * k - n - 2, n) * binomial(2l * k - 2 * n - 2, k - n - 1);
        // scale (1/3)^(2k-n-1) up to the common denominator 3^(2k-1)
        num += term * BigInt::pow(3, static_cast<unsigned long>(n));
    }
    return Rational(num, BigInt::pow(3, static_cast<unsigned long>(2 * k - 1)));
}

struct TruncatedTie {
    double value;       // partial sum through the last included term
    double tail_bound;  // rigorous upper bound on the omitted mass
    long terms;         // number of terms summed
};

namespace detail {

/// log of t_n = C(n-1, k-1)^2 * 4^-n, evaluated in log space so the
/// series is usable far beyond the bignum-friendly range.
inline double log_tie_term(long k, long n) {
    return 2.0 * (std::lgamma(static_cast<double>(n)) - std::lgamma(static_cast<double>(k)) -
                  std::lgamma(static_cast<double>(n - k + 1))) -
           static_cast<double>(n) * std::log(4.0);
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace detail

/// Partial sum of the infinite tie series for the fair game,
/// sum_{n=k}^{n_max} C(n-1, k-1)^2 (1/4)^n.
inline double tie_series_partial(long k, long n_max) {
    if (k < 1) throw std::domain_error("tie_series_partial: k must be >= 1");
    detail::KahanSum acc;
    for (long n = k; n <= n_max; ++n) acc.add(std::exp(detail::log_tie_term(k, n)));
    return acc.sum;
}

/// Truncated evaluation of the infinite tie series with a rigorous tail
/// bound. The term ratio t_{n+1}/t_n = (n/(n-k+1))^2 / 4 decreases in n and
/// drops below 1/2 well before n = 8k, so from that point the tail is
/// bounded by the geometric series t_n * r/(1-r). Summation stops once the
/// bound reaches eps/2, keeping slack for float rounding.
inline TruncatedTie tie_prob_truncated(long k, double eps) {
    if (k < 1) throw std::domain_error("tie_prob_truncated: k must be >= 1");
    if (!(eps > 0.0) || eps >= 1.0) throw std::domain_error("tie_prob_truncated: need 0 < eps < 1");
    detail::KahanSum acc;
    long n = k;
    for (;;) {
        const double t = std::exp(detail::log_tie_term(k, n));
        acc.add(t);
        if (n >= 8 * k) {
            double r = static_cast<double>(n) / static_cast<double>(n - k + 1);
            r = r * r / 4.0;
            const double tail = t * r / (1.0 - r);
            if (tail <= 0.5 * eps) return {acc.sum, tail, n - k + 1};
        }
        ++n;
    }
}

/// Exact expected number of raw turns of the fair game (double-tail rounds
/// included). Sums over penultimate lattice states (x, y) and the number of
/// diagonal moves k on the path to them; each state change costs 4/3 turns
/// on average, which the prefactors 8/3, 8/3, -4/3 already carry.
inline Rational expected_turns(StartCounts start) {
    const StartCounts s = start.normalized();
    const long a = s.i1, b = s.i2;

    // paths ending on the x = I1 boundary, penultimate states (I1-1, y)
    Rational first = 0;
    for (long m = 0; m <= a - 1; ++m)
        for (long k = 0; k <= m; ++k) {
            const long len = m + b - k;
            Rational t = Rational(BigInt(len) * binomial(len - 1, k) * binomial(m + b - 2 * k - 1, b - k - 1),
                                  BigInt::pow(3, static_cast<unsigned long>(len)));
            first += t;
        }

    // paths ending on the y = I2 boundary, penultimate states (x, I2-1)
    Rational second = 0;
    for (long m = 0; m <= b - 1; ++m)
        for (long k = 0; k <= std::min(a - 1, m); ++k) {
            const long len = m + a - k;
            Rational t = Rational(BigInt(len) * binomial(len - 1, k) * binomial(m + a - 2 * k - 1, a - k - 1),
                                  BigInt::pow(3, static_cast<unsigned long>(len)));
            second += t;
        }

    // the corner (I1-1, I2-1) is counted by both boundary sums; subtract it
    Rational corner = 0;
    for (long k = 0; k <= a - 1; ++k) {
        const long len = a + b - k - 1;
        Rational t = Rational(BigInt(len) * binomial(len - 1, k) * binomial(a + b - 2 * k - 2, a - k - 1),
                              BigInt::pow(3, static_cast<unsigned long>(len)));
        corner += t;
    }

    return Rational(8, 3) * first + Rational(8, 3) * second - Rational(4, 3) * corner;
}

}  // namespace coinduel::exact

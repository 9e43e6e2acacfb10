#include <catch2/catch.hpp>

#include <random>

#include "coinduel/markov.hpp"

using namespace coinduel;

TEST_CASE("compressed transitions", "[markov]") {
    const auto fair = markov::compressed_transitions(Rational(1, 2));
    CHECK(fair.both == Rational(1, 3));
    CHECK(fair.only1 == Rational(1, 3));
    CHECK(fair.only2 == Rational(1, 3));

    const auto sure = markov::compressed_transitions(Rational(1));
    CHECK(sure.both == Rational(1));
    CHECK(sure.only1 == Rational(0));

    const auto p23 = markov::compressed_transitions(Rational(2, 3));
    CHECK(p23.both == Rational(1, 2));
    CHECK(p23.only1 == Rational(1, 4));
    CHECK(p23.only2 == Rational(1, 4));

    CHECK_THROWS_AS(markov::compressed_transitions(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(markov::compressed_transitions(Rational(3, 2)), std::domain_error);
}

TEST_CASE("compressed transitions always sum to one", "[markov]") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<long> num(1, 999);
    for (int i = 0; i < 50; ++i) {
        const long d = num(gen) + 1;
        const long n = std::uniform_int_distribution<long>(1, d)(gen);
        const auto tr = markov::compressed_transitions(Rational(n, d));
        REQUIRE(tr.both + tr.only1 + tr.only2 == Rational(1));
    }
}

TEST_CASE("tie DP: known values", "[markov]") {
    CHECK(markov::tie_prob_dp(1, 1, Rational(1, 2)) == Rational(1, 3));
    CHECK(markov::tie_prob_dp(2, 1, Rational(1, 2)) == Rational(1, 9));
    for (int k : {1, 3, 7}) CHECK(markov::tie_prob_dp(k, k, Rational(1)) == Rational(1));
}

TEST_CASE("tie DP is symmetric in the players", "[markov]") {
    const Rational ps[] = {Rational(1, 2), Rational(3, 10), Rational(9, 10)};
    for (const auto& p : ps)
        for (int i1 = 1; i1 <= 6; ++i1)
            for (int i2 = i1; i2 <= 6; ++i2)
                REQUIRE(markov::tie_prob_dp(i1, i2, p) == markov::tie_prob_dp(i2, i1, p));
}

TEST_CASE("outcome distribution sums to one exactly", "[markov]") {
    const Rational ps[] = {Rational(1, 2), Rational(1, 10), Rational(9, 10), Rational(1)};
    for (const auto& p : ps)
        for (int i1 = 1; i1 <= 5; ++i1)
            for (int i2 = 1; i2 <= 5; ++i2) {
                const auto d = markov::outcome_dist_dp(i1, i2, p);
                REQUIRE(d.p1_wins + d.p2_wins + d.tie == Rational(1));
            }
}

TEST_CASE("outcome distribution: known values and symmetry", "[markov]") {
    const auto d11 = markov::outcome_dist_dp(1, 1, Rational(1, 2));
    CHECK(d11.tie == Rational(1, 3));
    CHECK(d11.p1_wins == Rational(1, 3));
    CHECK(d11.p2_wins == Rational(1, 3));

    const auto d21 = markov::outcome_dist_dp(2, 1, Rational(1, 2));
    CHECK(d21.tie == Rational(1, 9));
    CHECK(d21.p1_wins + d21.p2_wins == Rational(8, 9));

    for (int k : {2, 4}) {
        const auto d = markov::outcome_dist_dp(k, k, Rational(7, 10));
        REQUIRE(d.p1_wins == d.p2_wins);
    }
}

TEST_CASE("tie probability is nondecreasing in p", "[markov]") {
    for (int k : {10, 50}) {
        Rational prev = markov::tie_prob_dp(k, k, Rational(1, 10));
        for (int tenths = 2; tenths <= 10; ++tenths) {
            const Rational cur = markov::tie_prob_dp(k, k, Rational(tenths, 10));
            REQUIRE(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("widening the start gap cannot raise the tie probability", "[markov]") {
    const Rational ps[] = {Rational(1, 4), Rational(1, 2), Rational(9, 10)};
    for (const auto& p : ps)
        for (int i2 = 1; i2 <= 8; ++i2)
            for (int i1 = 2; i1 <= i2; ++i1)
                REQUIRE(markov::tie_prob_dp(i1 - 1, i2, p) <= markov::tie_prob_dp(i1, i2, p));
}

TEST_CASE("expected turns DP", "[markov]") {
    CHECK(markov::expected_turns_dp(1, 1) == Rational(4, 3));
    CHECK(markov::expected_turns_dp(1, 2) == Rational(16, 9));
    CHECK(markov::expected_turns_dp(1, 2) == markov::expected_turns_dp(2, 1));
}

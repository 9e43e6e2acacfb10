#include <catch2/catch.hpp>

#include <cmath>
#include <vector>

#include "coinduel/evolving.hpp"

using namespace coinduel;
using evolving::HazardGame;

TEST_CASE("heads probability", "[evolving]") {
    const double lam = 0.7;
    CHECK(evolving::heads_probability(12, 12, lam) == Approx(1.0 - std::exp(-lam)));
    CHECK(evolving::heads_probability(5, 3, std::log(2.0)) == Approx(0.875));
    CHECK(evolving::heads_probability(9, 4, 10.0) >= 1.0 - std::exp(-10.0));
    CHECK_THROWS_AS(evolving::heads_probability(5, 6, 1.0), std::domain_error);
    CHECK_THROWS_AS(evolving::heads_probability(5, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(evolving::heads_probability(5, 2, 0.0), std::domain_error);
}

TEST_CASE("hazard schedule is strictly increasing in (0, 1)", "[evolving]") {
    const auto p = evolving::hazard_schedule(40, 0.3);
    REQUIRE(p.size() == 40);
    for (std::size_t i = 0; i < p.size(); ++i) {
        REQUIRE(p[i] > 0.0);
        REQUIRE(p[i] < 1.0);
        if (i > 0) REQUIRE(p[i] > p[i - 1]);
    }
}

TEST_CASE("single-stage depletion time is geometric", "[evolving]") {
    const HazardGame game(1, std::log(2.0));  // p = 1/2
    const auto pmf = evolving::depletion_time_pmf(game, 1e-12);
    CHECK(pmf.min_round == 1);
    for (int t = 1; t <= 20; ++t)
        REQUIRE(pmf.mass_at(t) == Approx(std::pow(0.5, t)).epsilon(1e-12));
}

TEST_CASE("synthetic schedule: two Geom(1/2) stages by hand", "[evolving]") {
    const std::vector<double> probs{0.5, 0.5};
    const auto pmf = evolving::depletion_time_pmf(probs, 1e-12);
    // P(N = t) = (t-1) / 2^t
    CHECK(pmf.mass_at(2) == Approx(0.25).epsilon(1e-12));
    CHECK(pmf.mass_at(3) == Approx(0.25).epsilon(1e-12));
    CHECK(pmf.mass_at(4) == Approx(3.0 / 16.0).epsilon(1e-12));
    CHECK(pmf.mass_at(1) == 0.0);
}

TEST_CASE("depletion mean matches the sum of geometric means", "[evolving]") {
    for (auto [n, lam] : {std::pair{30, 0.5}, std::pair{5, 2.0}}) {
        const auto schedule = evolving::hazard_schedule(n, lam);
        double expected = 0.0;
        for (double p : schedule) expected += 1.0 / p;
        const auto pmf = evolving::depletion_time_pmf(HazardGame(n, lam), 1e-12);
        REQUIRE(pmf.mean() == Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("depletion PMF conserves mass", "[evolving]") {
    const auto pmf = evolving::depletion_time_pmf(HazardGame(25, 0.4), 1e-12);
    CHECK(pmf.total() + pmf.residual == Approx(1.0).margin(1e-12));
    CHECK(pmf.residual <= 1e-12);
}

TEST_CASE("degenerate schedule of certain stages", "[evolving]") {
    const std::vector<double> probs{1.0, 1.0, 1.0};
    const auto pmf = evolving::depletion_time_pmf(probs, 1e-15);
    CHECK(pmf.mass_at(3) == Approx(1.0));
    CHECK(pmf.residual == 0.0);
}

TEST_CASE("argument guards", "[evolving]") {
    CHECK_THROWS_AS(evolving::depletion_time_pmf(HazardGame(3, 1.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(evolving::depletion_time_pmf(HazardGame(3, 1.0), -1e-6), std::domain_error);
    const std::vector<double> bad{0.5, 0.0};
    CHECK_THROWS_AS(evolving::depletion_time_pmf(bad, 1e-9), std::domain_error);
    CHECK_THROWS_AS(HazardGame(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(HazardGame(3, 0.0), std::domain_error);
}

TEST_CASE("single token tie probability has the closed form p/(2-p)", "[evolving]") {
    for (double lam : {0.3, std::log(2.0), 1.5, 4.0}) {
        const double p = 1.0 - std::exp(-lam);
        const double closed = p / (2.0 - p);
        REQUIRE(evolving::tie_prob_evolving_exact(HazardGame(1, lam), 1e-12) ==
                Approx(closed).margin(1e-9));
    }
    CHECK(evolving::tie_prob_evolving_exact(HazardGame(1, std::log(2.0)), 1e-12) ==
          Approx(1.0 / 3.0).margin(1e-9));
}

TEST_CASE("fast hazards force a near-certain tie", "[evolving]") {
    CHECK(evolving::tie_prob_evolving_exact(HazardGame(10, 5.0), 1e-10) >= 0.97);
}

TEST_CASE("initial count has little effect on the tie probability", "[evolving]") {
    const double lam = 1.0;
    const double t50 = evolving::tie_prob_evolving_exact(HazardGame(50, lam), 1e-10);
    const double t100 = evolving::tie_prob_evolving_exact(HazardGame(100, lam), 1e-10);
    const double t200 = evolving::tie_prob_evolving_exact(HazardGame(200, lam), 1e-10);
    CHECK(std::abs(t50 - t100) < 0.01);
    CHECK(std::abs(t100 - t200) < 0.01);
    CHECK(std::abs(t50 - t200) < 0.01);
}

TEST_CASE("tie probability is nondecreasing in lambda", "[evolving]") {
    double prev = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double lam = 0.1 + i * (5.0 - 0.1) / 29.0;
        const double tie = evolving::tie_prob_evolving_exact(HazardGame(200, lam), 1e-10);
        REQUIRE(tie >= prev);
        prev = tie;
    }
}

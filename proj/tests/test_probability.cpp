#include "doctest.h"
#include "ecic/errors.hpp"
#include "ecic/probability.hpp"

using namespace ecic;

TEST_CASE("joint law at rho = 0 is the independent product") {
    const auto d = LinkPairDistribution::solve(0.5, 0.0);
    CHECK(d.both_off == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.cross_only == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.direct_only == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.both_on == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("joint law at rho = -1 puts all mass on mismatched pairs") {
    const auto d = LinkPairDistribution::solve(0.5, -1.0);
    CHECK(d.both_off == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.cross_only == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.direct_only == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.both_on == doctest::Approx(0.0).epsilon(1e-12));
    // covariance = both_on - p^2
    CHECK(d.both_on - 0.25 == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("joint law at (0.5, 0.5)") {
    const auto d = LinkPairDistribution::solve(0.5, 0.5);
    CHECK(d.both_off == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(d.cross_only == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(d.direct_only == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(d.both_on == doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("joint law satisfies cell, marginal and covariance constraints on a grid") {
    for (double rho = -1.0; rho <= 1.0001; rho += 0.25) {
        const auto s = feasible_link_probabilities(rho);
        for (int k = 0; k <= 20; ++k) {
            const double p = s.lo + (s.hi - s.lo) * k / 20.0;
            const auto d = LinkPairDistribution::solve(p, rho);
            const double sum = d.both_off + d.cross_only + d.direct_only + d.both_on;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(d.direct_only + d.both_on == doctest::Approx(p).epsilon(1e-12));
            CHECK(d.cross_only + d.both_on == doctest::Approx(p).epsilon(1e-12));
            CHECK(d.both_on - p * p ==
                  doctest::Approx(rho * p * (1.0 - p)).epsilon(1e-12));
            CHECK(d.both_off >= 0.0);
            CHECK(d.both_on >= 0.0);
            CHECK(d.cross_only >= 0.0);
        }
    }
}

TEST_CASE("feasible interval endpoints") {
    const auto full_neg = feasible_link_probabilities(-1.0);
    CHECK(full_neg.lo == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(full_neg.hi == doctest::Approx(0.5).epsilon(1e-12));

    const auto full_pos = feasible_link_probabilities(1.0);
    CHECK(full_pos.lo == 0.0);
    CHECK(full_pos.hi == 1.0);

    const auto half = feasible_link_probabilities(-0.5);
    CHECK(half.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(half.hi == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    CHECK(half.lo <= half.hi);
    for (double rho = -1.0; rho <= 1.0001; rho += 0.1) {
        const auto s = feasible_link_probabilities(std::min(rho, 1.0));
        CHECK(s.lo <= s.hi);
    }
}

TEST_CASE("domain and feasibility errors") {
    CHECK_THROWS_AS(feasible_link_probabilities(-1.5), DomainError);
    CHECK_THROWS_AS(LinkPairDistribution::solve(0.5, 2.0), DomainError);
    CHECK_THROWS_AS(LinkPairDistribution::solve(1.5, 0.0), DomainError);
    CHECK_THROWS_AS(LinkPairDistribution::solve(0.25, -1.0), InfeasiblePair);
    CHECK_THROWS_AS(LinkPairDistribution::solve(0.1, -0.5), InfeasiblePair);
    CHECK_THROWS_AS(rate_weight(0.0, 0.5), DegenerateP);
}

TEST_CASE("rate weight values") {
    CHECK(rate_weight(0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rate_weight(0.5, -1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rate_weight(0.5, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("rate weight bounds and the one-link-on identity") {
    for (double rho = -1.0; rho <= 1.0001; rho += 0.125) {
        const auto s = feasible_link_probabilities(std::min(rho, 1.0));
        for (int k = 0; k <= 25; ++k) {
            const double p = s.lo + (s.hi - s.lo) * k / 25.0;
            if (p == 0.0) continue;
            const double w = rate_weight(p, rho);
            const double q = 1.0 - p;
            CHECK(w >= 1.0 - 1e-12);
            CHECK(w <= 1.0 + 2.0 * q + 1e-12);
            const auto d = LinkPairDistribution::solve(p, rho);
            CHECK(std::abs(p * w - (1.0 - d.both_off)) < 1e-12);
        }
    }
}

#include <cmath>

#include "doctest.h"
#include "ecic/channel.hpp"

using namespace ecic;

TEST_CASE("full correlation forces equal link pairs") {
    RngStream rng(1);
    const auto dist = LinkPairDistribution::solve(0.5, 1.0);
    const auto trace = sample_channel_trace(dist, 2000, rng);
    for (const auto& g : trace.slots) {
        CHECK(g.g11() == g.g12());
        CHECK(g.g21() == g.g22());
    }
}

TEST_CASE("full anticorrelation forces complementary link pairs") {
    RngStream rng(2);
    const auto dist = LinkPairDistribution::solve(0.5, -1.0);
    const auto trace = sample_channel_trace(dist, 2000, rng);
    for (const auto& g : trace.slots) {
        CHECK(g.g11() != g.g12());
        CHECK(g.g21() != g.g22());
    }
}

TEST_CASE("empirical cell frequencies pass a 4-sigma test on 1e5 slots") {
    const std::size_t slots = 100000;
    for (double rho : {0.0, 0.5, -0.5}) {
        RngStream rng(static_cast<std::uint64_t>(100 + rho * 8));
        const auto dist = LinkPairDistribution::solve(0.5, rho);
        const auto trace = sample_channel_trace(dist, slots, rng);
        const double expected[4] = {dist.both_off, dist.cross_only, dist.direct_only,
                                    dist.both_on};
        for (int tx = 0; tx < 2; ++tx) {
            const PairCounts counts = count_pairs(trace, tx);
            for (int cell = 0; cell < 4; ++cell) {
                const double freq = static_cast<double>(counts.cells[cell]) / slots;
                const double sigma = std::sqrt(expected[cell] * (1 - expected[cell]) / slots);
                CHECK(std::abs(freq - expected[cell]) <= 4.0 * sigma + 1e-9);
            }
        }
    }
}

TEST_CASE("transmitter pairs are independent of each other") {
    const std::size_t slots = 100000;
    RngStream rng(77);
    const auto dist = LinkPairDistribution::solve(0.5, 0.5);
    const auto trace = sample_channel_trace(dist, slots, rng);
    // joint (tx1 both_on, tx2 both_on) should factor
    std::size_t both = 0;
    for (const auto& g : trace.slots) {
        if (g.local_pair(0) == 0b11 && g.local_pair(1) == 0b11) ++both;
    }
    const double freq = static_cast<double>(both) / slots;
    const double expect = dist.both_on * dist.both_on;
    const double sigma = std::sqrt(expect * (1 - expect) / slots);
    CHECK(std::abs(freq - expect) <= 4.0 * sigma + 1e-9);
}

TEST_CASE("traces replay bit-for-bit from the same stream") {
    const auto dist = LinkPairDistribution::solve(0.4, 0.25);
    RngStream a(42), b(42);
    const auto ta = sample_channel_trace(dist, 500, a);
    const auto tb = sample_channel_trace(dist, 500, b);
    for (std::size_t t = 0; t < 500; ++t) CHECK(ta.slots[t].bits == tb.slots[t].bits);
}

#include "doctest.h"
#include "ecic/multicast.hpp"

using namespace ecic;

namespace {

BitVec random_payload(std::size_t k, std::uint64_t seed) {
    RngStream rng(seed);
    BitVec v(k);
    v.fill_random(rng);
    return v;
}

}  // namespace

TEST_CASE("empty payloads succeed immediately") {
    const auto dist = LinkPairDistribution::solve(0.5, 0.0);
    const auto out = run_two_multicast(BitVec(0), BitVec(0), dist, 100, 1);
    CHECK(out.success);
    CHECK(out.completion_slot[0] == 0);
    CHECK(out.completion_slot[1] == 0);
}

TEST_CASE("erasure-free single-payload delivery completes in k plus rank slack") {
    const auto dist = LinkPairDistribution::solve(1.0, 1.0);
    const std::int64_t k = 120;
    const auto out = run_two_multicast(random_payload(k, 5), BitVec(0), dist,
                                       default_multicast_budget(k, 0, 1.0), 7);
    REQUIRE(out.success);
    CHECK(out.decoded_match);
    for (int rx = 0; rx < 2; ++rx) {
        CHECK(out.completion_slot[rx] >= k);       // one fresh equation per slot
        CHECK(out.completion_slot[rx] <= k + 30);  // rank completion slack
    }
}

TEST_CASE("erasure-free equal payloads need at least k1 + k2 slots") {
    const auto dist = LinkPairDistribution::solve(1.0, 1.0);
    const std::int64_t k = 80;
    const auto out = run_two_multicast(random_payload(k, 11), random_payload(k, 12), dist,
                                       default_multicast_budget(k, k, 1.0), 13);
    REQUIRE(out.success);
    CHECK(out.decoded_match);
    for (int rx = 0; rx < 2; ++rx) {
        // each receiver absorbs one bit per slot and must resolve 2k unknowns
        CHECK(out.completion_slot[rx] >= 2 * k);
        CHECK(out.completion_slot[rx] <= 2 * k + 30);
    }
}

TEST_CASE("half-erasure payloads decode within the default budget nearly always") {
    const auto dist = LinkPairDistribution::solve(0.5, 0.0);
    const std::int64_t k = 300;
    const std::int64_t budget = default_multicast_budget(k, k, 0.5);
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto out =
            run_two_multicast(random_payload(k, 100 + trial), random_payload(k, 200 + trial),
                              dist, budget, 1000 + static_cast<std::uint64_t>(trial));
        if (out.success) {
            CHECK(out.decoded_match);
            ++ok;
        }
    }
    CHECK(ok >= 98);
}

TEST_CASE("runs replay deterministically from the seed") {
    const auto dist = LinkPairDistribution::solve(0.5, 0.5);
    const auto a = run_two_multicast(random_payload(64, 3), random_payload(32, 4), dist,
                                     default_multicast_budget(64, 32, 0.5), 99);
    const auto b = run_two_multicast(random_payload(64, 3), random_payload(32, 4), dist,
                                     default_multicast_budget(64, 32, 0.5), 99);
    CHECK(a.success == b.success);
    CHECK(a.completion_slot[0] == b.completion_slot[0]);
    CHECK(a.completion_slot[1] == b.completion_slot[1]);
}

#pragma once

#include <cstdint>

#include "ecic/gf2.hpp"
#include "ecic/probability.hpp"

namespace ecic {

// Standalone two-multicast subproblem: both transmitters must deliver their
// payload to BOTH receivers. Each slot every transmitter sends a fresh
// uniform random combination of its payload bits (coefficients from the
// shared seeded stream); a receiver treats every non-erased observation as a
// linear equation over the joint payload vector and is done at full rank.
struct TwoMulticastOutcome {
    bool success = false;       // both receivers reached full rank within budget
    std::int64_t budget = 0;
    std::int64_t completion_slot[2] = {-1, -1};  // slots consumed per receiver
    bool decoded_match = false;  // solved values reproduce the payloads
};

// floor(2 max(k1,k2)/(1-q^2) + slack_mult * max^(2/3)).
std::int64_t default_multicast_budget(std::int64_t k1, std::int64_t k2, double p,
                                      double slack_mult = 5.0);

TwoMulticastOutcome run_two_multicast(const BitVec& payload1, const BitVec& payload2,
                                      const LinkPairDistribution& dist, std::int64_t budget,
                                      std::uint64_t seed);

}  // namespace ecic

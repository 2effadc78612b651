#include "ecic/multicast.hpp"

#include <cmath>

#include "ecic/channel.hpp"
#include "ecic/protocol_config.hpp"

namespace ecic {

std::int64_t default_multicast_budget(std::int64_t k1, std::int64_t k2, double p,
                                      double slack_mult) {
    const std::int64_t k = std::max(k1, k2);
    if (k == 0) return 0;
    const double q = 1.0 - p;
    const double core = 2.0 * static_cast<double>(k) / (1.0 - q * q);
    const double slack = slack_mult * static_cast<double>(concentration_slack(k));
    return static_cast<std::int64_t>(std::floor(core + slack));
}

TwoMulticastOutcome run_two_multicast(const BitVec& payload1, const BitVec& payload2,
                                      const LinkPairDistribution& dist, std::int64_t budget,
                                      std::uint64_t seed) {
    const std::int64_t k1 = static_cast<std::int64_t>(payload1.size());
    const std::int64_t k2 = static_cast<std::int64_t>(payload2.size());
    const std::size_t joint = static_cast<std::size_t>(k1 + k2);

    TwoMulticastOutcome out;
    out.budget = budget;
    if (joint == 0) {
        out.success = true;
        out.completion_slot[0] = out.completion_slot[1] = 0;
        out.decoded_match = true;
        return out;
    }

    RngStream channel(seed, StreamRole::channel, {0});
    RngStream coeffs1(seed, StreamRole::multicast_coefficients, {0});
    RngStream coeffs2(seed, StreamRole::multicast_coefficients, {1});

    IncrementalBasis basis[2] = {IncrementalBasis(joint), IncrementalBasis(joint)};

    for (std::int64_t slot = 1; slot <= budget; ++slot) {
        BitVec mask1(payload1.size()), mask2(payload2.size());
        mask1.fill_random(coeffs1);
        mask2.fill_random(coeffs2);
        const bool x1 = k1 > 0 && mask1.dot(payload1);
        const bool x2 = k2 > 0 && mask2.dot(payload2);

        const ChannelTrace step = sample_channel_trace(dist, 1, channel);
        const GainNibble g = step.slots[0];
        const bool gains[2][2] = {{g.g11(), g.g21()}, {g.g12(), g.g22()}};  // [rx][tx]

        for (int rx = 0; rx < 2; ++rx) {
            if (basis[rx].full_rank()) continue;
            const bool from1 = gains[rx][0] && k1 > 0;
            const bool from2 = gains[rx][1] && k2 > 0;
            if (!from1 && !from2) continue;
            BitVec eq(joint);
            if (from1) mask1.for_each_set([&](std::size_t c) { eq.set(c, true); });
            if (from2) mask2.for_each_set([&](std::size_t c) { eq.set(k1 + c, true); });
            const bool y = (from1 && x1) ^ (from2 && x2);
            basis[rx].insert(std::move(eq), y);
            if (basis[rx].full_rank()) out.completion_slot[rx] = slot;
        }
        if (basis[0].full_rank() && basis[1].full_rank()) break;
    }

    out.success = basis[0].full_rank() && basis[1].full_rank();
    if (out.success) {
        out.decoded_match = true;
        for (int rx = 0; rx < 2; ++rx) {
            const auto values = basis[rx].solution();
            for (std::int64_t c = 0; c < k1; ++c)
                out.decoded_match = out.decoded_match && (values[c] == payload1.get(c));
            for (std::int64_t c = 0; c < k2; ++c)
                out.decoded_match = out.decoded_match && (values[k1 + c] == payload2.get(c));
        }
    }
    return out;
}

}  // namespace ecic

#include "ecic/channel.hpp"

namespace ecic {

namespace {

// Cumulative cell order: both_off, cross_only, direct_only, both_on.
std::uint8_t sample_pair(const LinkPairDistribution& dist, double u) {
    double acc = dist.both_off;
    if (u < acc) return 0b00;
    acc += dist.cross_only;
    if (u < acc) return 0b01;
    acc += dist.direct_only;
    if (u < acc) return 0b10;
    return 0b11;
}

}  // namespace

ChannelTrace sample_channel_trace(const LinkPairDistribution& dist, std::size_t slots,
                                  RngStream& rng) {
    ChannelTrace trace;
    trace.slots.resize(slots);
    for (std::size_t t = 0; t < slots; ++t) {
        const std::uint8_t tx1 = sample_pair(dist, rng.next_unit());
        const std::uint8_t tx2 = sample_pair(dist, rng.next_unit());
        // tx1 pair: direct = g11, cross = g12; tx2 pair: direct = g22, cross = g21.
        std::uint8_t bits = 0;
        bits |= static_cast<std::uint8_t>(((tx1 >> 1) & 1) << 0);  // g11
        bits |= static_cast<std::uint8_t>((tx1 & 1) << 1);         // g12
        bits |= static_cast<std::uint8_t>((tx2 & 1) << 2);         // g21
        bits |= static_cast<std::uint8_t>(((tx2 >> 1) & 1) << 3);  // g22
        trace.slots[t].bits = bits;
    }
    return trace;
}

PairCounts count_pairs(const ChannelTrace& trace, int tx) {
    PairCounts counts;
    for (const GainNibble& g : trace.slots) ++counts.cells[g.local_pair(tx)];
    return counts;
}

}  // namespace ecic

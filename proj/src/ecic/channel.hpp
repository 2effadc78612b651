#pragma once

#include <cstdint>
#include <vector>

#include "ecic/encoder_table.hpp"
#include "ecic/probability.hpp"
#include "ecic/rng.hpp"

namespace ecic {

// Realized link gains for every slot of a communication block. Receivers see
// all four gains instantly; transmitters are fed their own pair one slot late.
struct ChannelTrace {
    std::vector<GainNibble> slots;

    std::size_t length() const { return slots.size(); }
};

// I.i.d. slots; within a slot the two transmitters' pairs are independent,
// each drawn from dist. Draw order (tx1 pair, then tx2 pair, one uniform
// draw each) is part of the replay contract.
ChannelTrace sample_channel_trace(const LinkPairDistribution& dist, std::size_t slots,
                                  RngStream& rng);

// Empirical cell counts of one transmitter's pair over a trace, indexed by
// (direct << 1) | cross.
struct PairCounts {
    std::uint64_t cells[4] = {0, 0, 0, 0};
};

PairCounts count_pairs(const ChannelTrace& trace, int tx);

}  // namespace ecic

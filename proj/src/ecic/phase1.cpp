#include "ecic/phase1.hpp"

namespace ecic {

PacketStatus classify_packet(bool direct_on, bool cross_on) {
    if (direct_on) return cross_on ? PacketStatus::arrived_both : PacketStatus::delivered;
    return cross_on ? PacketStatus::cross_only : PacketStatus::pending;
}

Phase1Transmitter::Phase1Transmitter(std::int64_t message_bits)
    : message_bits_(message_bits) {}

void Phase1Transmitter::classify_in_flight(std::pair<bool, bool> pair) {
    switch (classify_packet(pair.first, pair.second)) {
        case PacketStatus::pending:
            break;  // stays at the head, goes out again
        case PacketStatus::delivered:
            delivered_.push_back(next_bit_++);
            break;
        case PacketStatus::arrived_both:
            arrived_both_.push_back(next_bit_++);
            break;
        case PacketStatus::cross_only:
            cross_only_.push_back(next_bit_++);
            break;
    }
    in_flight_ = false;
}

std::optional<std::int64_t> Phase1Transmitter::step(
    std::optional<std::pair<bool, bool>> delayed_pair) {
    if (in_flight_ && delayed_pair) classify_in_flight(*delayed_pair);
    if (next_bit_ >= message_bits_) return std::nullopt;
    in_flight_ = true;
    return next_bit_;
}

void Phase1Transmitter::finish(std::optional<std::pair<bool, bool>> delayed_pair) {
    if (in_flight_ && delayed_pair) classify_in_flight(*delayed_pair);
}

Phase1Result run_phase1(const PhasePlan& plan, const ChannelTrace& trace) {
    const std::int64_t slots = plan.phase1_slots;
    Phase1Result result;
    Phase1Transmitter senders[2] = {Phase1Transmitter(plan.message_bits),
                                    Phase1Transmitter(plan.message_bits)};

    for (int i = 0; i < 2; ++i) {
        result.tx[i].sent_bit.assign(slots, -1);
        result.tx[i].departure_slot.assign(plan.message_bits, -1);
    }

    for (std::int64_t t = 0; t < slots; ++t) {
        for (int i = 0; i < 2; ++i) {
            std::optional<std::pair<bool, bool>> delayed;
            if (t > 0 && result.tx[i].sent_bit[t - 1] >= 0) {
                const auto pair = trace.slots[t - 1].local_pair(i);
                delayed = std::make_pair((pair >> 1) & 1, pair & 1);
            }
            const auto bit = senders[i].step(delayed);
            if (bit) result.tx[i].sent_bit[t] = static_cast<std::int32_t>(*bit);
        }
    }
    for (int i = 0; i < 2; ++i) {
        if (slots > 0 && result.tx[i].sent_bit[slots - 1] >= 0) {
            const auto pair = trace.slots[slots - 1].local_pair(i);
            senders[i].finish(std::make_pair((pair >> 1) & 1, pair & 1));
        }
        result.tx[i].delivered = senders[i].delivered();
        result.tx[i].arrived_both = senders[i].arrived_both();
        result.tx[i].cross_only = senders[i].cross_only();
        result.tx[i].pending = senders[i].pending_count();
        for (std::int64_t t = 0; t < slots; ++t) {
            const std::int32_t b = result.tx[i].sent_bit[t];
            if (b >= 0) result.tx[i].departure_slot[b] = t;
        }
    }

    for (int i = 0; i < 2; ++i) {
        result.overrun = result.overrun || result.tx[i].pending > 0;
        const std::int64_t sizes[2] = {
            static_cast<std::int64_t>(result.tx[i].arrived_both.size()),
            static_cast<std::int64_t>(result.tx[i].cross_only.size())};
        const std::int64_t padded[2] = {plan.padded_arrived_both, plan.padded_cross_only};
        for (int j = 0; j < 2; ++j) {
            result.overflow = result.overflow || sizes[j] > padded[j];
        }

        // Overheard-bit accounting at the unintended receiver. A queued bit is
        // cleanly known there when the interfering transmitter contributed
        // nothing to that slot; padding zeros are known by construction.
        const int other = 1 - i;
        const auto clean_at_other = [&](std::int64_t bit) {
            const std::int64_t t = result.tx[i].departure_slot[bit];
            if (result.tx[other].sent_bit[t] < 0) return true;
            const auto pair = trace.slots[t].local_pair(other);
            return ((pair >> 1) & 1) == 0;  // other's direct link off
        };
        const std::vector<std::int64_t>* queues[2] = {&result.tx[i].arrived_both,
                                                      &result.tx[i].cross_only};
        const double q = 1.0 - plan.dist.link_on_prob;
        for (int j = 0; j < 2; ++j) {
            std::int64_t known = padded[j] - sizes[j];  // padding
            for (std::int64_t bit : *queues[j]) known += clean_at_other(bit) ? 1 : 0;
            result.tx[i].known_to_other[j] = known;
            const double threshold = q * static_cast<double>(padded[j]) -
                                     static_cast<double>(plan.known_bits_slack);
            result.shortfall = result.shortfall || static_cast<double>(known) < threshold;
        }
    }
    return result;
}

}  // namespace ecic

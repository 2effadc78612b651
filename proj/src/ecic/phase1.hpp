#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecic/channel.hpp"
#include "ecic/protocol_config.hpp"

namespace ecic {

// Where a transmitted bit lands once the transmitter has seen the delayed
// gains of its slot.
enum class PacketStatus : std::uint8_t {
    pending,       // both links off: stays at the head of the initial queue
    delivered,     // direct only: reached its receiver, no retransmission needed
    arrived_both,  // both links on: queue it for a both-receiver retransmission
    cross_only,    // cross only: reached only the unintended receiver
};

PacketStatus classify_packet(bool direct_on, bool cross_on);

// Head-of-queue sender driven exclusively by its own delayed gain pair. The
// interface shape is the locality contract: a step sees the pair of the
// previous slot and nothing else about the channel.
class Phase1Transmitter {
  public:
    explicit Phase1Transmitter(std::int64_t message_bits);

    // delayed_pair = (direct, cross) realized for this transmitter's previous
    // slot, or nullopt when it did not transmit then. Returns the message bit
    // index to send now, or nullopt to stay silent.
    std::optional<std::int64_t> step(std::optional<std::pair<bool, bool>> delayed_pair);

    // Classification of the final in-flight bit after the last slot's gains.
    void finish(std::optional<std::pair<bool, bool>> delayed_pair);

    bool queue_empty() const { return next_bit_ >= message_bits_ && !in_flight_; }
    std::int64_t pending_count() const {
        return message_bits_ - next_bit_ + (in_flight_ ? 1 : 0);
    }

    const std::vector<std::int64_t>& delivered() const { return delivered_; }
    const std::vector<std::int64_t>& arrived_both() const { return arrived_both_; }
    const std::vector<std::int64_t>& cross_only() const { return cross_only_; }

  private:
    void classify_in_flight(std::pair<bool, bool> pair);

    std::int64_t message_bits_;
    std::int64_t next_bit_ = 0;  // first bit not yet departed
    bool in_flight_ = false;     // head bit transmitted, awaiting delayed gains
    std::vector<std::int64_t> delivered_, arrived_both_, cross_only_;
};

// Per-transmitter ledger after the first phase.
struct TransmitterLedger {
    std::vector<std::int64_t> delivered;
    std::vector<std::int64_t> arrived_both;  // join order preserved
    std::vector<std::int64_t> cross_only;
    std::vector<std::int32_t> sent_bit{};  // per slot, -1 when silent
    std::vector<std::int64_t> departure_slot;  // per bit, -1 while pending
    std::int64_t pending = 0;

    // Bits the unintended receiver saw cleanly (other transmitter silent or
    // its direct link off at the departure slot), plus the padding both
    // receivers know to be zero.
    std::int64_t known_to_other[2] = {0, 0};  // [0]=arrived_both, [1]=cross_only
};

struct Phase1Result {
    TransmitterLedger tx[2];
    bool overrun = false;    // some initial queue not drained in time
    bool overflow = false;   // some retransmission queue above its padded size
    bool shortfall = false;  // overheard-bit count below the printed threshold
};

// Runs the first phase over slots [0, plan.phase1_slots) of the trace,
// classifying from delayed local CSI only. Raises no errors: all halt
// conditions come back as flags.
Phase1Result run_phase1(const PhasePlan& plan, const ChannelTrace& trace);

}  // namespace ecic

#pragma once

#include <cstdint>

#include "ecic/probability.hpp"

namespace ecic {

// paper_literal transmits exactly the structured coded-row ranges of the
// three-phase scheme; budget_matched caps/floors the final phase so the total
// time tracks the capacity-side slot budget, relying on the generic rank
// decoder to certify that the transmitted equations suffice.
enum class PayloadPolicy { paper_literal, budget_matched };

// The first phase runs until the initial queues have drained with high
// probability. inverse_departure uses the mean drain time m/(1 - both_off)
// (a bit departs unless both links are off); printed_text uses m/both_off,
// falling back to the former when both_off = 0.
enum class Phase1DurationRule { inverse_departure, printed_text };

// Concentration-slack multipliers, in units of delta = ceil(m^(2/3)). The
// m^(2/3) scaling keeps every tail bound exponentially vanishing; the
// constants trade error probability against slot overhead.
struct SlackPolicy {
    double phase1 = 0.05;        // phase-1 guard floor; the sigma term carries the load
    double drain_sigmas = 3.5;   // phase-1 guard in drain-time std devs
    double padding = 0.4;        // queue padding and overflow window
    double combine = 0.05;       // extra combined retransmission rows
    double duration = 0.03;      // extra slots per retransmission phase
    double phase3_rows = 0.2;    // extra coded rows past the padded queue size
    double known_bits = 1.0;     // overheard-count window
    double deficit = 1.0;        // budget_matched equation floor
    double budget = 2.5;         // budget_matched total-time allowance
};

struct ProtocolConfig {
    std::int64_t message_bits = 2000;  // per user
    double p = 0.5;
    double rho = 0.0;
    std::uint64_t seed = 1;
    PayloadPolicy policy = PayloadPolicy::paper_literal;
    Phase1DurationRule phase1_rule = Phase1DurationRule::inverse_departure;
    SlackPolicy slack;
};

// Smallest integer d with d^3 >= m^2, i.e. ceil(m^(2/3)) computed exactly.
std::int64_t concentration_slack(std::int64_t m);

enum class Phase3Mode { none, multicast, point_to_point, fresh_combined };

// Everything both endpoints must agree on before a slot is sent. All fields
// are deterministic functions of the config, which is what lets the two
// transmitters coordinate phase boundaries without talking to each other and
// lets receivers replay the whole schedule from the channel record.
struct PhasePlan {
    LinkPairDistribution dist;
    std::int64_t message_bits = 0;
    std::int64_t delta = 0;

    double expected_arrived_both = 0.0;  // mean final size of the both-links queue
    double expected_cross_only = 0.0;    // mean final size of the cross-only queue
    std::int64_t padded_arrived_both = 0;
    std::int64_t padded_cross_only = 0;
    std::int64_t coded_rows_arrived_both = 0;  // padded + 2 delta (0 when unused)
    std::int64_t coded_rows_cross_only = 0;
    std::int64_t known_bits_slack = 0;  // overheard-count window in bits

    std::int64_t phase1_slots = 0;
    std::int64_t combined_rows = 0;  // per transmitter, 0 skips phase 2
    std::int64_t phase2_slots = 0;

    Phase3Mode phase3_mode = Phase3Mode::none;
    std::int64_t phase3_row_begin = 0;  // range within the designated coded product
    std::int64_t phase3_row_end = 0;
    std::int64_t phase3_slots = 0;

    double theory_rate = 0.0;   // per-user symmetric capacity value
    double theory_slots = 0.0;  // capacity-side total-time budget

    std::int64_t total_slots() const { return phase1_slots + phase2_slots + phase3_slots; }
    std::int64_t phase3_rows() const { return phase3_row_end - phase3_row_begin; }
};

// Validates the config (m >= 1, p feasible and nonzero) and derives the plan.
PhasePlan make_phase_plan(const ProtocolConfig& cfg);

}  // namespace ecic

#pragma once

#include <cstdint>
#include <vector>

#include "ecic/channel.hpp"
#include "ecic/coding.hpp"
#include "ecic/phase1.hpp"
#include "ecic/protocol_config.hpp"

namespace ecic {

struct ErrorFlags {
    bool phase1_overrun = false;     // an initial queue outlived phase 1
    bool queue_overflow = false;     // a retransmission queue beat its padded size
    bool overhear_shortfall = false; // too few bits overheard at the other receiver
    bool decode_failure = false;     // some receiver could not pin all its bits
    bool inconsistent = false;       // 0 = 1 derived: engine bug, never channel noise
};

struct TrialResult {
    std::int64_t phase1_slots = 0;
    std::int64_t phase2_slots = 0;
    std::int64_t phase3_slots = 0;
    std::int64_t total_slots = 0;
    ErrorFlags flags;
    bool decoded_ok[2] = {false, false};
    bool wrong_decode[2] = {false, false};  // decoder claimed success with bad bits
    double achieved_rate[2] = {0.0, 0.0};
    std::int64_t queue_sizes[2][2] = {{0, 0}, {0, 0}};   // [tx][arrived_both, cross_only]
    std::int64_t known_counts[2][2] = {{0, 0}, {0, 0}};
    bool outer_bound_ok = true;
};

// Full record of one trial. Receivers lawfully see everything here except
// message values and queue values: the channel record (full CSI), both
// phase-1 schedules (replayable from the record), the shared functional
// streams, and their own observations.
struct TrialContext {
    PhasePlan plan;
    ChannelTrace trace;
    Phase1Result phase1;
    bool halted_after_phase1 = false;
    BitVec message[2];
    QueueVector queues[2];
    // Per retransmission slot and transmitter: the transmitted linear
    // functional over that transmitter's queue columns; width 0 = silent.
    std::vector<BitVec> phase2_functionals[2];
    std::vector<BitVec> phase3_functionals[2];
    std::vector<std::uint8_t> observations[2];
};

struct DecodeResult {
    bool success = false;
    bool inconsistent = false;
    BitVec decoded;
};

// Runs phases 1-3 for one seeded trial index and logs everything.
TrialContext run_phases(const ProtocolConfig& cfg, const PhasePlan& plan,
                        std::uint64_t trial);

// Generic rank decoder: one equation per non-erased observation across all
// phases, over all 2m message bits; succeeds iff the receiver's own m bits
// are uniquely determined (interference bits may stay open).
DecodeResult decode(const TrialContext& ctx, int receiver);

TrialResult run_trial(const ProtocolConfig& cfg, const PhasePlan& plan, std::uint64_t trial);

struct SimulationSummary {
    int trials = 0;
    int decode_successes = 0;
    double mean_rate[2] = {0.0, 0.0};      // over decoded trials
    double mean_total_slots = 0.0;          // over all trials
    double mean_phase_slots[3] = {0.0, 0.0, 0.0};
    double err_phase1_overrun = 0.0;
    double err_queue_overflow = 0.0;
    double err_overhear_shortfall = 0.0;
    double err_decode_failure = 0.0;
    std::int64_t wrong_decodes = 0;
    std::int64_t outer_bound_violations = 0;
    std::int64_t inconsistent_trials = 0;
    double theory_rate = 0.0;
    double theory_slots = 0.0;
};

// Work-stealing pool over trial indices; per-trial streams derive from
// (seed, trial), so results are identical for any thread count.
SimulationSummary run_simulation(const ProtocolConfig& cfg, int trials, int threads);

// Per-trial results, same order as trial indices.
std::vector<TrialResult> run_trials(const ProtocolConfig& cfg, int trials, int threads);

SimulationSummary summarize(const ProtocolConfig& cfg, const PhasePlan& plan,
                            const std::vector<TrialResult>& results);

}  // namespace ecic

#pragma once

#include <cstdint>
#include <vector>

#include "ecic/gf2.hpp"
#include "ecic/phase1.hpp"
#include "ecic/protocol_config.hpp"

namespace ecic {

// Pre-shared fair-coin matrices for one transmitter's two retransmission
// queues: (padded + 2 delta) rows by padded-size columns. Receivers rebuild
// them from the same (seed, trial, tx) tuple, so only the tuple is shared.
struct CodedMatrices {
    BitMatrix arrived_both;  // columns index the both-links queue
    BitMatrix cross_only;    // columns index the cross-only queue
};

CodedMatrices build_coded_matrices(const PhasePlan& plan, std::uint64_t seed,
                                   std::uint64_t trial, int tx);

// One transmitter's padded queues flattened to a column vector: the
// both-links queue occupies columns [0, n1), the cross-only queue the rest.
// column_message maps a column to its message bit, -1 for padding zeros
// (public constants, never unknowns).
struct QueueVector {
    BitVec values;
    std::vector<std::int32_t> column_message;
    std::int64_t arrived_both_width = 0;

    std::int64_t width() const { return static_cast<std::int64_t>(values.size()); }
};

QueueVector build_queue_vector(const PhasePlan& plan, const TransmitterLedger& ledger,
                               const BitVec& message);

// Bit pool for a retransmission phase: each row is a linear functional over
// the transmitter's queue columns, with its value precomputed.
struct PhasePayload {
    BitMatrix functionals;  // rows x queue width
    BitVec row_values;

    std::int64_t rows() const { return static_cast<std::int64_t>(functionals.rows()); }
};

// Combined stream: row r is the XOR of row r of both coded products, i.e.
// the concatenation of the two matrix rows as one functional. Empty when the
// plan skips phase 2.
PhasePayload combine_phase2(const PhasePlan& plan, const CodedMatrices& mats,
                            const QueueVector& queue);

// Leftover coded rows in the plan's phase-3 range, from whichever product the
// branch designates. Empty for none/fresh_combined modes.
PhasePayload phase3_payload(const PhasePlan& plan, const CodedMatrices& mats,
                            const QueueVector& queue);

}  // namespace ecic

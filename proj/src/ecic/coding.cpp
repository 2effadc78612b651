#include "ecic/coding.hpp"

namespace ecic {

CodedMatrices build_coded_matrices(const PhasePlan& plan, std::uint64_t seed,
                                   std::uint64_t trial, int tx) {
    CodedMatrices m;
    RngStream s1(seed, StreamRole::coded_matrix, {trial, static_cast<std::uint64_t>(tx), 0});
    RngStream s2(seed, StreamRole::coded_matrix, {trial, static_cast<std::uint64_t>(tx), 1});
    m.arrived_both = BitMatrix::random(plan.coded_rows_arrived_both,
                                       plan.padded_arrived_both, s1);
    m.cross_only = BitMatrix::random(plan.coded_rows_cross_only, plan.padded_cross_only, s2);
    return m;
}

QueueVector build_queue_vector(const PhasePlan& plan, const TransmitterLedger& ledger,
                               const BitVec& message) {
    QueueVector q;
    q.arrived_both_width = plan.padded_arrived_both;
    const std::int64_t width = plan.padded_arrived_both + plan.padded_cross_only;
    q.values = BitVec(static_cast<std::size_t>(width));
    q.column_message.assign(static_cast<std::size_t>(width), -1);

    const auto fill = [&](const std::vector<std::int64_t>& bits, std::int64_t offset) {
        for (std::size_t k = 0; k < bits.size(); ++k) {
            const std::int64_t col = offset + static_cast<std::int64_t>(k);
            q.column_message[col] = static_cast<std::int32_t>(bits[k]);
            q.values.set(col, message.get(bits[k]));
        }
    };
    fill(ledger.arrived_both, 0);
    fill(ledger.cross_only, plan.padded_arrived_both);
    return q;
}

namespace {

// Places a matrix row into the queue-wide functional at a column offset.
void embed_row(BitVec& dst, const BitVec& src, std::int64_t offset) {
    src.for_each_set([&](std::size_t c) { dst.flip(offset + c); });
}

}  // namespace

PhasePayload combine_phase2(const PhasePlan& plan, const CodedMatrices& mats,
                            const QueueVector& queue) {
    PhasePayload payload;
    const std::int64_t k = plan.combined_rows;
    payload.functionals = BitMatrix(k, queue.width());
    payload.row_values = BitVec(k);
    for (std::int64_t r = 0; r < k; ++r) {
        BitVec& row = payload.functionals.row(r);
        embed_row(row, mats.arrived_both.row(r), 0);
        embed_row(row, mats.cross_only.row(r), queue.arrived_both_width);
        payload.row_values.set(r, row.dot(queue.values));
    }
    return payload;
}

PhasePayload phase3_payload(const PhasePlan& plan, const CodedMatrices& mats,
                            const QueueVector& queue) {
    PhasePayload payload;
    if (plan.phase3_mode != Phase3Mode::multicast &&
        plan.phase3_mode != Phase3Mode::point_to_point) {
        payload.functionals = BitMatrix(0, queue.width());
        payload.row_values = BitVec(0);
        return payload;
    }
    const bool from_arrived_both = plan.phase3_mode == Phase3Mode::multicast;
    const BitMatrix& src = from_arrived_both ? mats.arrived_both : mats.cross_only;
    const std::int64_t offset = from_arrived_both ? 0 : queue.arrived_both_width;
    const std::int64_t rows = plan.phase3_rows();
    payload.functionals = BitMatrix(rows, queue.width());
    payload.row_values = BitVec(rows);
    for (std::int64_t r = 0; r < rows; ++r) {
        BitVec& row = payload.functionals.row(r);
        embed_row(row, src.row(plan.phase3_row_begin + r), offset);
        payload.row_values.set(r, row.dot(queue.values));
    }
    return payload;
}

}  // namespace ecic

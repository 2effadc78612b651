#include "ecic/linear_system.hpp"

#include <string>

#include "ecic/errors.hpp"

namespace ecic {

void EquationSystem::add(BitVec coeffs, bool rhs) {
    if (coeffs.size() != unknowns_) {
        throw DimensionMismatch("equation width " + std::to_string(coeffs.size()) +
                                " != unknown count " + std::to_string(unknowns_));
    }
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(rhs ? 1 : 0);
}

std::size_t SolveOutcome::determined_count() const {
    std::size_t n = 0;
    for (VarState v : values) n += v != VarState::undetermined;
    return n;
}

SolveOutcome solve_determined(const EquationSystem& sys) {
    const std::size_t n = sys.unknowns();
    std::vector<BitVec> rows;
    std::vector<std::uint8_t> rhs;
    rows.reserve(sys.equation_count());
    for (std::size_t i = 0; i < sys.equation_count(); ++i) {
        rows.push_back(sys.coeffs(i));
        rhs.push_back(sys.rhs(i) ? 1 : 0);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t next = 0;  // first unpivoted row
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        std::swap(rhs[next], rhs[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(col)) {
                rows[r].xor_with(rows[next]);
                rhs[r] ^= rhs[next];
            }
        }
        pivot_col.push_back(col);
        ++next;
    }

    SolveOutcome out;
    out.values.assign(n, VarState::undetermined);
    for (std::size_t r = next; r < rows.size(); ++r) {
        if (rhs[r] && !rows[r].any()) {
            out.consistent = false;
            return out;
        }
    }
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        // RREF: other pivot columns are already cleared from this row, so a
        // singleton support means no free variable feeds it.
        if (rows[r].popcount() == 1) {
            out.values[pivot_col[r]] = rhs[r] ? VarState::one : VarState::zero;
        }
    }
    return out;
}

}  // namespace ecic

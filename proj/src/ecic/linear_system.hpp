#pragma once

#include <cstdint>
#include <vector>

#include "ecic/gf2.hpp"

namespace ecic {

// Receiver-side observation ledger: linear equations over a declared set of
// unknowns. Duplicate rows are fine; elimination dedups.
class EquationSystem {
  public:
    explicit EquationSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    std::size_t unknowns() const { return unknowns_; }
    std::size_t equation_count() const { return rows_.size(); }

    void add(BitVec coeffs, bool rhs);

    const BitVec& coeffs(std::size_t i) const { return rows_[i]; }
    bool rhs(std::size_t i) const { return rhs_[i] != 0; }

  private:
    std::size_t unknowns_;
    std::vector<BitVec> rows_;
    std::vector<std::uint8_t> rhs_;
};

enum class VarState : std::uint8_t { undetermined = 0, zero = 1, one = 2 };

struct SolveOutcome {
    bool consistent = true;
    std::vector<VarState> values;  // one per unknown

    bool determined(std::size_t i) const { return values[i] != VarState::undetermined; }
    bool value(std::size_t i) const { return values[i] == VarState::one; }
    std::size_t determined_count() const;
};

// Gaussian elimination to reduced row echelon form. A variable is assigned
// iff the system pins it uniquely (its pivot row has no free-column support);
// assignments satisfy every equation. consistent == false means 0 = 1 was
// derived, which in this artifact signals a simulator bug, not channel noise.
SolveOutcome solve_determined(const EquationSystem& sys);

}  // namespace ecic

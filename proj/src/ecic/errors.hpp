#pragma once

#include <stdexcept>

namespace ecic {

// Parameter outside its mathematical domain (e.g. correlation outside [-1,1]).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (p, rho) pair with no valid joint link law: p lies outside the feasible
// interval for that correlation.
struct InfeasiblePair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// p = 0: the region degenerates to the origin and the rate weight is undefined.
struct DegenerateP : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exhaustive-enumeration request beyond the configured budget.
struct BudgetExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyGrid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ecic

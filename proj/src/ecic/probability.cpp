#include "ecic/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecic/errors.hpp"

namespace ecic {

namespace {

void require_correlation(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw DomainError("correlation must lie in [-1, 1], got " + std::to_string(rho));
    }
}

}  // namespace

FeasibleInterval feasible_link_probabilities(double rho) {
    require_correlation(rho);
    if (rho == 1.0) return {0.0, 1.0};
    FeasibleInterval s;
    s.lo = std::max(0.0, -rho / (1.0 - rho));
    s.hi = std::min(1.0, 1.0 / (1.0 - rho));
    return s;
}

LinkPairDistribution LinkPairDistribution::solve(double p, double rho) {
    require_correlation(rho);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("link probability must lie in [0, 1], got " + std::to_string(p));
    }
    if (!feasible_link_probabilities(rho).contains(p)) {
        throw InfeasiblePair("p = " + std::to_string(p) +
                             " lies outside the feasible interval for rho = " +
                             std::to_string(rho));
    }

    const double q = 1.0 - p;
    LinkPairDistribution d;
    d.link_on_prob = p;
    d.correlation = rho;
    d.both_on = p * q * rho + p * p;
    d.direct_only = p - d.both_on;
    d.cross_only = d.direct_only;
    d.both_off = 1.0 - d.both_on - d.direct_only - d.cross_only;

    // Feasibility check above guarantees cells in [0,1]; clamp the residual
    // rounding so downstream cumulative samplers stay well-formed.
    d.both_on = std::clamp(d.both_on, 0.0, 1.0);
    d.direct_only = std::clamp(d.direct_only, 0.0, 1.0);
    d.cross_only = d.direct_only;
    d.both_off = std::clamp(d.both_off, 0.0, 1.0);
    return d;
}

double rate_weight(double p, double rho) {
    if (p == 0.0) {
        throw DegenerateP("rate weight undefined at p = 0 (origin-only region)");
    }
    return rate_weight_polynomial(p, rho);
}

double rate_weight_polynomial(double p, double rho) {
    require_correlation(rho);
    return 2.0 - (1.0 - p) * rho - p;
}

}  // namespace ecic

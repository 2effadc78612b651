#pragma once

namespace ecic {

// Comparison tolerance for all closed-form analytics.
inline constexpr double kAnalyticTol = 1e-12;

// Closed interval of link-on probabilities p admitting a valid Bernoulli pair
// law with correlation rho. Collapses to {1/2} at rho = -1 and is [0,1] for
// rho >= 0.
struct FeasibleInterval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double p, double tol = kAnalyticTol) const {
        return p >= lo - tol && p <= hi + tol;
    }
};

FeasibleInterval feasible_link_probabilities(double rho);

// Joint law of one transmitter's two outgoing link gains within a slot:
// (direct, cross) with matching Bernoulli(p) marginals and correlation rho.
// Cell names say which links are on.
struct LinkPairDistribution {
    double link_on_prob = 0.0;   // p, marginal of each link
    double correlation = 0.0;    // rho, between the two links

    double both_off = 0.0;       // neither link on
    double cross_only = 0.0;     // only the cross link on
    double direct_only = 0.0;    // only the direct link on
    double both_on = 0.0;        // both links on

    // Unique solution of the marginal + covariance constraints. Throws
    // DomainError for rho outside [-1,1] or p outside [0,1], InfeasiblePair
    // when p is not feasible for rho (some cell would leave [0,1]).
    static LinkPairDistribution solve(double p, double rho);

    // Probability of the (direct, cross) gain pair.
    double cell(bool direct_on, bool cross_on) const {
        if (direct_on) return cross_on ? both_on : direct_only;
        return cross_on ? cross_only : both_off;
    }
};

// Weight on the partner's rate in the weighted-sum capacity bound:
// (2p - p(1-p)rho - p^2) / p. Equals (1 - both_off)/p, the per-slot
// probability that at least one outgoing link is on relative to the direct
// link probability. Throws DegenerateP at p = 0.
double rate_weight(double p, double rho);

// Same polynomial without the division; defined for all feasible p including
// p = 0 (limit value 2 - rho).
double rate_weight_polynomial(double p, double rho);

}  // namespace ecic

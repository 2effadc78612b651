#pragma once

#include <array>
#include <vector>

#include "ecic/probability.hpp"

namespace ecic {

struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;
};

// Half-plane a*R1 + b*R2 <= c.
struct RateConstraint {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double slack(const RatePoint& pt) const { return c - a * pt.r1 - b * pt.r2; }
};

// Capacity region for a feasible (p, rho): the nonnegative quadrant cut by
// two box bounds R_i <= p and two weighted-sum bounds R_i + w*R_j <= w(1-q^2).
// Constraints are symmetric under swapping the two rates; at p = 0 all four
// collapse the region to the origin.
class CapacityRegion {
  public:
    CapacityRegion(double p, double rho);

    double link_on_prob() const { return p_; }
    double correlation() const { return rho_; }
    double weight() const { return weight_; }

    const std::array<RateConstraint, 4>& constraints() const { return constraints_; }

    bool contains(const RatePoint& pt, double tol = kAnalyticTol) const;

    // Slack of each constraint at the point, same order as constraints().
    std::array<double, 4> slacks(const RatePoint& pt) const;

    // Largest r with (r, r) in the region: min{p, w(1-q^2)/(1+w)}.
    double max_symmetric_rate() const;

    // Boundary walked from the (p, 0) side to the (0, p) side. All polytope
    // vertices are included (plus the symmetric point, which Fig.-style
    // comparisons anchor on), then edges are densified until at least
    // `resolution` points are emitted. Every point is on the boundary.
    std::vector<RatePoint> boundary_polyline(int resolution) const;

  private:
    double p_;
    double rho_;
    double weight_;
    std::array<RateConstraint, 4> constraints_;

    std::vector<RatePoint> corner_points() const;
};

double max_symmetric_rate(double p, double rho);

// Sum-rate 2 * max_symmetric_rate(p, rho) over the feasible part of a p grid.
// Infeasible grid entries are skipped and reported; an all-infeasible grid is
// an EmptyGrid error.
struct SumRatePoint {
    double p = 0.0;
    double sum_rate = 0.0;
};

struct SumRateCurve {
    double rho = 0.0;
    std::vector<SumRatePoint> points;
    std::vector<double> skipped;  // infeasible grid entries
};

SumRateCurve sum_rate_curve(double rho, const std::vector<double>& p_grid);

// Evenly spaced grid across the feasible interval, endpoints included.
std::vector<double> feasible_grid(double rho, double step);

}  // namespace ecic

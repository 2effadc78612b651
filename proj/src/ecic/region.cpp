#include "ecic/region.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecic/errors.hpp"

namespace ecic {

namespace {

constexpr double kGeomTol = 1e-9;

bool same_point(const RatePoint& a, const RatePoint& b) {
    return std::abs(a.r1 - b.r1) < kGeomTol && std::abs(a.r2 - b.r2) < kGeomTol;
}

// Intersection of a1 x + b1 y = c1 and a2 x + b2 y = c2, if non-parallel.
bool intersect(double a1, double b1, double c1, double a2, double b2, double c2,
               RatePoint& out) {
    const double det = a1 * b2 - a2 * b1;
    if (std::abs(det) < 1e-14) return false;
    out.r1 = (c1 * b2 - c2 * b1) / det;
    out.r2 = (a1 * c2 - a2 * c1) / det;
    if (out.r1 == 0.0) out.r1 = 0.0;  // normalize -0
    if (out.r2 == 0.0) out.r2 = 0.0;
    return true;
}

}  // namespace

CapacityRegion::CapacityRegion(double p, double rho) : p_(p), rho_(rho) {
    // Validates feasibility as a side effect.
    LinkPairDistribution::solve(p, rho);
    weight_ = rate_weight_polynomial(p, rho);
    const double q = 1.0 - p;
    const double cap = weight_ * (1.0 - q * q);
    constraints_ = {RateConstraint{1.0, 0.0, p},
                    RateConstraint{0.0, 1.0, p},
                    RateConstraint{1.0, weight_, cap},
                    RateConstraint{weight_, 1.0, cap}};
}

bool CapacityRegion::contains(const RatePoint& pt, double tol) const {
    if (pt.r1 < -tol || pt.r2 < -tol) return false;
    for (const auto& c : constraints_) {
        if (c.slack(pt) < -tol) return false;
    }
    return true;
}

std::array<double, 4> CapacityRegion::slacks(const RatePoint& pt) const {
    std::array<double, 4> s{};
    for (std::size_t i = 0; i < constraints_.size(); ++i) s[i] = constraints_[i].slack(pt);
    return s;
}

double CapacityRegion::max_symmetric_rate() const {
    const double q = 1.0 - p_;
    return std::min(p_, weight_ * (1.0 - q * q) / (1.0 + weight_));
}

std::vector<RatePoint> CapacityRegion::corner_points() const {
    // Lines: the four constraints plus both axes.
    struct Line {
        double a, b, c;
    };
    std::vector<Line> lines;
    for (const auto& c : constraints_) lines.push_back({c.a, c.b, c.c});
    lines.push_back({1.0, 0.0, 0.0});
    lines.push_back({0.0, 1.0, 0.0});

    std::vector<RatePoint> pts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            RatePoint pt;
            if (!intersect(lines[i].a, lines[i].b, lines[i].c, lines[j].a, lines[j].b,
                           lines[j].c, pt))
                continue;
            if (!contains(pt, kGeomTol)) continue;
            bool dup = false;
            for (const auto& seen : pts) dup = dup || same_point(seen, pt);
            if (!dup) pts.push_back(pt);
        }
    }

    // The symmetric boundary point anchors region comparisons; it is a vertex
    // only when the two weighted bounds intersect inside the box.
    const double r = max_symmetric_rate();
    RatePoint sym{r, r};
    bool dup = false;
    for (const auto& seen : pts) dup = dup || same_point(seen, sym);
    if (!dup) pts.push_back(sym);

    // Keep the outer frontier: drop the origin and interior axis points, then
    // order from the (p, 0) side to the (0, p) side.
    std::vector<RatePoint> frontier;
    for (const auto& pt : pts) {
        if (pt.r1 < kGeomTol && pt.r2 < kGeomTol) continue;
        bool tight = false;
        for (const auto& c : constraints_) tight = tight || std::abs(c.slack(pt)) < kGeomTol;
        if (tight) frontier.push_back(pt);
    }
    if (frontier.empty()) frontier.push_back({0.0, 0.0});  // p = 0
    std::sort(frontier.begin(), frontier.end(), [](const RatePoint& a, const RatePoint& b) {
        if (std::abs(a.r1 - b.r1) > kGeomTol) return a.r1 > b.r1;
        return a.r2 < b.r2;
    });
    return frontier;
}

std::vector<RatePoint> CapacityRegion::boundary_polyline(int resolution) const {
    if (resolution < 2) throw DomainError("boundary resolution must be >= 2");
    std::vector<RatePoint> verts = corner_points();
    if (verts.size() == 1) return verts;

    const std::size_t target = std::max<std::size_t>(resolution, verts.size());
    std::size_t extra = target - verts.size();

    std::vector<double> lengths(verts.size() - 1);
    double total = 0.0;
    for (std::size_t e = 0; e + 1 < verts.size(); ++e) {
        lengths[e] = std::hypot(verts[e + 1].r1 - verts[e].r1, verts[e + 1].r2 - verts[e].r2);
        total += lengths[e];
    }

    std::vector<RatePoint> out;
    double cum = 0.0;
    std::size_t placed = 0;
    for (std::size_t e = 0; e + 1 < verts.size(); ++e) {
        out.push_back(verts[e]);
        cum += lengths[e];
        const std::size_t through_here =
            total > 0 ? static_cast<std::size_t>(std::round(extra * cum / total)) : 0;
        const std::size_t n_mid = through_here - placed;
        placed = through_here;
        for (std::size_t k = 1; k <= n_mid; ++k) {
            const double t = static_cast<double>(k) / (n_mid + 1);
            out.push_back({verts[e].r1 + t * (verts[e + 1].r1 - verts[e].r1),
                           verts[e].r2 + t * (verts[e + 1].r2 - verts[e].r2)});
        }
    }
    out.push_back(verts.back());
    return out;
}

double max_symmetric_rate(double p, double rho) {
    return CapacityRegion(p, rho).max_symmetric_rate();
}

SumRateCurve sum_rate_curve(double rho, const std::vector<double>& p_grid) {
    SumRateCurve curve;
    curve.rho = rho;
    const FeasibleInterval s = feasible_link_probabilities(rho);
    for (double p : p_grid) {
        if (!s.contains(p)) {
            curve.skipped.push_back(p);
            continue;
        }
        curve.points.push_back({p, 2.0 * max_symmetric_rate(p, rho)});
    }
    if (curve.points.empty()) {
        throw EmptyGrid("no feasible p in grid for rho = " + std::to_string(rho));
    }
    return curve;
}

std::vector<double> feasible_grid(double rho, double step) {
    const FeasibleInterval s = feasible_link_probabilities(rho);
    std::vector<double> grid;
    grid.push_back(s.lo);
    for (double p = std::ceil(s.lo / step) * step; p < s.hi - kGeomTol; p += step) {
        if (p > s.lo + kGeomTol) grid.push_back(p);
    }
    if (s.hi > s.lo + kGeomTol) grid.push_back(s.hi);
    return grid;
}

}  // namespace ecic

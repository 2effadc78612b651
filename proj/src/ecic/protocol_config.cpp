#include "ecic/protocol_config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecic/errors.hpp"

namespace ecic {

std::int64_t concentration_slack(std::int64_t m) {
    if (m < 1) throw DomainError("message count must be >= 1");
    std::int64_t d = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(m), 2.0 / 3.0)));
    d = std::max<std::int64_t>(d - 2, 1);
    const auto cube_below = [m](std::int64_t x) { return x * x * x < m * m; };
    while (cube_below(d)) ++d;
    return d;
}

namespace {

std::int64_t ceil_div_double(double num, double den) {
    return static_cast<std::int64_t>(std::ceil(num / den));
}

std::int64_t slack_units(double multiplier, std::int64_t delta) {
    return static_cast<std::int64_t>(std::ceil(multiplier * static_cast<double>(delta)));
}

}  // namespace

PhasePlan make_phase_plan(const ProtocolConfig& cfg) {
    if (cfg.message_bits < 1) throw DomainError("message_bits must be >= 1");
    PhasePlan plan;
    plan.dist = LinkPairDistribution::solve(cfg.p, cfg.rho);
    if (cfg.p == 0.0) throw DegenerateP("protocol undefined at p = 0");

    const double m = static_cast<double>(cfg.message_bits);
    const double p = cfg.p;
    const double q = 1.0 - p;
    const double departure = 1.0 - plan.dist.both_off;  // per-slot head-of-queue exit
    const double one_link = 1.0 - q * q;                // per-slot non-erasure at a receiver

    plan.message_bits = cfg.message_bits;
    plan.delta = concentration_slack(cfg.message_bits);
    const std::int64_t pad = slack_units(cfg.slack.padding, plan.delta);

    plan.expected_arrived_both = plan.dist.both_on * m / departure;
    plan.expected_cross_only = plan.dist.cross_only * m / departure;
    // A queue with mean 0 stays empty with probability 1: no padding, no code.
    plan.padded_arrived_both =
        plan.expected_arrived_both == 0.0
            ? 0
            : static_cast<std::int64_t>(std::ceil(plan.expected_arrived_both)) + pad;
    plan.padded_cross_only =
        plan.expected_cross_only == 0.0
            ? 0
            : static_cast<std::int64_t>(std::ceil(plan.expected_cross_only)) + pad;
    // An empty queue keeps the 2-delta row count with zero columns: its coded
    // product is the empty functional.
    plan.coded_rows_arrived_both = plan.padded_arrived_both + 2 * plan.delta;
    plan.coded_rows_cross_only = plan.padded_cross_only + 2 * plan.delta;
    plan.known_bits_slack = slack_units(cfg.slack.known_bits, plan.delta);

    // Phase 1. The guard scales with the negative-binomial drain deviation
    // sqrt(m p00)/(1-p00); a deterministic drain (both_off = 0) needs only the
    // small fixed floor.
    const double drain_mean = m / departure;
    const double drain_sigma = std::sqrt(m * plan.dist.both_off) / departure;
    const std::int64_t guard =
        slack_units(cfg.slack.phase1, plan.delta) +
        static_cast<std::int64_t>(std::ceil(cfg.slack.drain_sigmas * drain_sigma));
    if (cfg.phase1_rule == Phase1DurationRule::inverse_departure || plan.dist.both_off == 0.0) {
        plan.phase1_slots = static_cast<std::int64_t>(std::ceil(drain_mean)) + guard;
    } else {
        plan.phase1_slots =
            static_cast<std::int64_t>(std::ceil(m / plan.dist.both_off)) + guard;
    }

    // Phase 2: the combined stream pairs equal-length prefixes of the two
    // coded products and multicasts them to both receivers.
    const std::int64_t min_padded = std::min(plan.padded_arrived_both, plan.padded_cross_only);
    const std::int64_t dur = slack_units(cfg.slack.duration, plan.delta);
    plan.combined_rows =
        min_padded == 0 ? 0 : min_padded + slack_units(cfg.slack.combine, plan.delta);
    plan.phase2_slots =
        plan.combined_rows == 0
            ? 0
            : ceil_div_double(2.0 * static_cast<double>(plan.combined_rows), one_link) + dur;

    const double weight = rate_weight(p, cfg.rho);
    plan.theory_rate = std::min(p, weight * one_link / (1.0 + weight));
    plan.theory_slots = std::max(1.0 / p, (1.0 + weight) / (weight * one_link)) * m;

    // Phase 3.
    const std::int64_t row_extra = slack_units(cfg.slack.phase3_rows, plan.delta);
    const std::int64_t begin = plan.combined_rows;  // rows already consumed by phase 2
    if (cfg.policy == PayloadPolicy::paper_literal) {
        if (plan.padded_cross_only > plan.padded_arrived_both) {
            // Leftover cross-only rows go out under a rate-p point-to-point code.
            plan.phase3_mode = Phase3Mode::point_to_point;
            plan.phase3_row_begin = begin;
            plan.phase3_row_end =
                std::min(plan.padded_cross_only + row_extra, plan.coded_rows_cross_only);
            plan.phase3_slots =
                ceil_div_double(static_cast<double>(plan.phase3_rows()), p) + dur;
        } else if (plan.padded_arrived_both > plan.padded_cross_only) {
            // Leftover both-links rows interest both receivers: multicast them.
            plan.phase3_mode = Phase3Mode::multicast;
            plan.phase3_row_begin = begin;
            plan.phase3_row_end =
                std::min(plan.padded_arrived_both + row_extra, plan.coded_rows_arrived_both);
            plan.phase3_slots =
                ceil_div_double(2.0 * static_cast<double>(plan.phase3_rows()), one_link) + dur;
        } else {
            plan.phase3_mode = Phase3Mode::none;  // equal sizes: phase 2 finishes the job
        }
        if (plan.phase3_mode != Phase3Mode::none && plan.phase3_rows() <= 0) {
            plan.phase3_mode = Phase3Mode::none;
            plan.phase3_row_begin = plan.phase3_row_end = 0;
            plan.phase3_slots = 0;
        }
    } else {
        // Budget-matched: fresh random combinations over the concatenated
        // queues for however many slots the capacity budget leaves, floored
        // by the expected equation deficit so the rank decoder can finish.
        const double expected_equations_phase1 = one_link * drain_mean;
        const double unknowns =
            m + plan.expected_arrived_both + plan.expected_cross_only;
        const double deficit = std::max(0.0, unknowns - expected_equations_phase1);
        const double covered_phase2 =
            std::min(one_link * static_cast<double>(plan.phase2_slots),
                     2.0 * static_cast<double>(plan.combined_rows));
        const double need = std::max(0.0, deficit - covered_phase2);
        const std::int64_t floor_slots = ceil_div_double(
            need + cfg.slack.deficit * static_cast<double>(plan.delta), one_link);
        const std::int64_t budget_total =
            static_cast<std::int64_t>(std::ceil(plan.theory_slots)) +
            slack_units(cfg.slack.budget, plan.delta);
        const std::int64_t remainder = budget_total - plan.phase1_slots - plan.phase2_slots;
        plan.phase3_mode = Phase3Mode::fresh_combined;
        plan.phase3_row_begin = plan.phase3_row_end = 0;
        plan.phase3_slots = std::max<std::int64_t>(0, std::max(remainder, floor_slots));
        if (plan.phase3_slots == 0) plan.phase3_mode = Phase3Mode::none;
    }

    return plan;
}

}  // namespace ecic

#include "ecic.h"

#include <cstring>
#include <new>

#include "ecic/entropy_lab.hpp"
#include "ecic/errors.hpp"
#include "ecic/probability.hpp"
#include "ecic/region.hpp"
#include "ecic/trial.hpp"

struct ecic_region {
    ecic::CapacityRegion region;
};

struct ecic_sim {
    ecic::ProtocolConfig config;
    ecic::PhasePlan plan;
};

namespace {

int guard(const std::invalid_argument& e) noexcept {
    if (dynamic_cast<const ecic::InfeasiblePair*>(&e)) return ECIC_ERR_INFEASIBLE;
    if (dynamic_cast<const ecic::DegenerateP*>(&e)) return ECIC_ERR_DEGENERATE;
    if (dynamic_cast<const ecic::BudgetExceeded*>(&e)) return ECIC_ERR_BUDGET;
    if (dynamic_cast<const ecic::EmptyGrid*>(&e)) return ECIC_ERR_EMPTY_GRID;
    return ECIC_ERR_DOMAIN;
}

template <typename Fn>
int wrap(Fn&& fn) noexcept {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return guard(e);
    } catch (const std::bad_alloc&) {
        return ECIC_ERR_INTERNAL;
    } catch (...) {
        return ECIC_ERR_INTERNAL;
    }
}

void copy_string(char* dst, size_t cap, const std::string& src) {
    if (!dst || cap == 0) return;
    const size_t n = std::min(cap - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

ecic::ProtocolConfig to_config(const ecic_sim_config& c) {
    ecic::ProtocolConfig cfg;
    cfg.message_bits = c.message_bits;
    cfg.p = c.p;
    cfg.rho = c.rho;
    cfg.seed = c.seed;
    cfg.policy = c.policy == ECIC_POLICY_BUDGET_MATCHED
                     ? ecic::PayloadPolicy::budget_matched
                     : ecic::PayloadPolicy::paper_literal;
    cfg.phase1_rule = c.phase1_rule == ECIC_PHASE1_PRINTED_TEXT
                          ? ecic::Phase1DurationRule::printed_text
                          : ecic::Phase1DurationRule::inverse_departure;
    cfg.slack.phase1 = c.slack_phase1;
    cfg.slack.drain_sigmas = c.slack_drain_sigmas;
    cfg.slack.padding = c.slack_padding;
    cfg.slack.combine = c.slack_combine;
    cfg.slack.duration = c.slack_duration;
    cfg.slack.phase3_rows = c.slack_phase3_rows;
    cfg.slack.known_bits = c.slack_known_bits;
    cfg.slack.deficit = c.slack_deficit;
    cfg.slack.budget = c.slack_budget;
    return cfg;
}

}  // namespace

extern "C" {

const char* ecic_version(void) { return "0.1.0"; }

const char* ecic_strerror(int code) {
    switch (code) {
        case ECIC_OK: return "ok";
        case ECIC_ERR_DOMAIN: return "parameter outside domain";
        case ECIC_ERR_INFEASIBLE: return "no joint link law for (p, rho)";
        case ECIC_ERR_DEGENERATE: return "degenerate p = 0";
        case ECIC_ERR_BUDGET: return "enumeration budget exceeded";
        case ECIC_ERR_EMPTY_GRID: return "no feasible grid point";
        case ECIC_ERR_INVALID: return "invalid argument";
        default: return "internal error";
    }
}

int ecic_joint_distribution(double p, double rho, ecic_joint_dist* out) {
    if (!out) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto d = ecic::LinkPairDistribution::solve(p, rho);
        out->p = d.link_on_prob;
        out->rho = d.correlation;
        out->both_off = d.both_off;
        out->cross_only = d.cross_only;
        out->direct_only = d.direct_only;
        out->both_on = d.both_on;
        return ECIC_OK;
    });
}

int ecic_feasible_interval(double rho, double* lo, double* hi) {
    if (!lo || !hi) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto s = ecic::feasible_link_probabilities(rho);
        *lo = s.lo;
        *hi = s.hi;
        return ECIC_OK;
    });
}

int ecic_rate_weight(double p, double rho, double* weight) {
    if (!weight) return ECIC_ERR_INVALID;
    return wrap([&] {
        ecic::LinkPairDistribution::solve(p, rho);
        *weight = ecic::rate_weight(p, rho);
        return ECIC_OK;
    });
}

int ecic_max_symmetric_rate(double p, double rho, double* rate) {
    if (!rate) return ECIC_ERR_INVALID;
    return wrap([&] {
        *rate = ecic::max_symmetric_rate(p, rho);
        return ECIC_OK;
    });
}

int ecic_sum_rate(double p, double rho, double* sum_rate) {
    if (!sum_rate) return ECIC_ERR_INVALID;
    return wrap([&] {
        *sum_rate = 2.0 * ecic::max_symmetric_rate(p, rho);
        return ECIC_OK;
    });
}

int ecic_identity_residual(double p, double rho, double* residual) {
    if (!residual) return ECIC_ERR_INVALID;
    return wrap([&] {
        *residual = ecic::check_identity(p, rho);
        return ECIC_OK;
    });
}

int ecic_region_create(double p, double rho, ecic_region** out) {
    if (!out) return ECIC_ERR_INVALID;
    return wrap([&] {
        *out = new ecic_region{ecic::CapacityRegion(p, rho)};
        return ECIC_OK;
    });
}

void ecic_region_destroy(ecic_region* region) { delete region; }

int ecic_region_constraint(const ecic_region* region, int index, double* a, double* b,
                           double* c) {
    if (!region || !a || !b || !c || index < 0 || index > 3) return ECIC_ERR_INVALID;
    const auto& cons = region->region.constraints()[static_cast<std::size_t>(index)];
    *a = cons.a;
    *b = cons.b;
    *c = cons.c;
    return ECIC_OK;
}

int ecic_region_contains(const ecic_region* region, double r1, double r2, double tol,
                         int* inside) {
    if (!region || !inside) return ECIC_ERR_INVALID;
    *inside = region->region.contains({r1, r2}, tol) ? 1 : 0;
    return ECIC_OK;
}

int ecic_region_slacks(const ecic_region* region, double r1, double r2, double slacks[4]) {
    if (!region || !slacks) return ECIC_ERR_INVALID;
    const auto s = region->region.slacks({r1, r2});
    for (int i = 0; i < 4; ++i) slacks[i] = s[static_cast<std::size_t>(i)];
    return ECIC_OK;
}

int ecic_region_max_symmetric_rate(const ecic_region* region, double* rate) {
    if (!region || !rate) return ECIC_ERR_INVALID;
    *rate = region->region.max_symmetric_rate();
    return ECIC_OK;
}

int ecic_region_boundary(const ecic_region* region, int resolution, double* xy,
                         size_t capacity, size_t* written) {
    if (!region || !xy || !written) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto pts = region->region.boundary_polyline(resolution);
        const size_t need = 2 * pts.size();
        if (need > capacity) return ECIC_ERR_INVALID;
        for (size_t i = 0; i < pts.size(); ++i) {
            xy[2 * i] = pts[i].r1;
            xy[2 * i + 1] = pts[i].r2;
        }
        *written = need;
        return ECIC_OK;
    });
}

int ecic_outer_bound_check(double p, double rho, double r1, double r2, double tol,
                           int* inside, double slacks[4]) {
    if (!inside) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto v = ecic::outer_bound_check({r1, r2}, p, rho, tol);
        *inside = v.inside ? 1 : 0;
        if (slacks) {
            for (int i = 0; i < 4; ++i) slacks[i] = v.slacks[static_cast<std::size_t>(i)];
        }
        return ECIC_OK;
    });
}

int ecic_lemma_scan_single_slot(double p, double rho, int m1, int m2,
                                ecic_lemma_report* out, char* argmin_buf,
                                size_t argmin_cap) {
    if (!out || m1 < 1 || m2 < 1) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto r = ecic::scan_all_single_slot(p, rho, m1, m2);
        out->min_margin = r.min_margin;
        out->encoders_checked = r.encoders_checked;
        if (r.argmin) copy_string(argmin_buf, argmin_cap, r.argmin->to_compact_string());
        return ECIC_OK;
    });
}

int ecic_lemma_scan_two_slot(double p, double rho, uint64_t samples, uint64_t seed,
                             int full_csit, ecic_lemma_report* out, char* argmin_buf,
                             size_t argmin_cap) {
    if (!out) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto r = ecic::scan_random_two_slot(p, rho, samples, seed, full_csit != 0);
        out->min_margin = r.min_margin;
        out->encoders_checked = r.encoders_checked;
        if (r.argmin) copy_string(argmin_buf, argmin_cap, r.argmin->to_compact_string());
        return ECIC_OK;
    });
}

void ecic_sim_config_init(ecic_sim_config* cfg) {
    if (!cfg) return;
    const ecic::ProtocolConfig defaults;
    cfg->message_bits = defaults.message_bits;
    cfg->p = defaults.p;
    cfg->rho = defaults.rho;
    cfg->seed = defaults.seed;
    cfg->policy = ECIC_POLICY_PAPER_LITERAL;
    cfg->phase1_rule = ECIC_PHASE1_INVERSE_DEPARTURE;
    cfg->slack_phase1 = defaults.slack.phase1;
    cfg->slack_drain_sigmas = defaults.slack.drain_sigmas;
    cfg->slack_padding = defaults.slack.padding;
    cfg->slack_combine = defaults.slack.combine;
    cfg->slack_duration = defaults.slack.duration;
    cfg->slack_phase3_rows = defaults.slack.phase3_rows;
    cfg->slack_known_bits = defaults.slack.known_bits;
    cfg->slack_deficit = defaults.slack.deficit;
    cfg->slack_budget = defaults.slack.budget;
}

int ecic_sim_create(const ecic_sim_config* cfg, ecic_sim** out) {
    if (!cfg || !out) return ECIC_ERR_INVALID;
    return wrap([&] {
        const ecic::ProtocolConfig config = to_config(*cfg);
        const ecic::PhasePlan plan = ecic::make_phase_plan(config);  // validates
        *out = new ecic_sim{config, plan};
        return ECIC_OK;
    });
}

void ecic_sim_destroy(ecic_sim* sim) { delete sim; }

int ecic_sim_run(ecic_sim* sim, int trials, int threads, ecic_sim_summary* out) {
    if (!sim || !out || trials < 1) return ECIC_ERR_INVALID;
    return wrap([&] {
        const auto s =
            ecic::summarize(sim->config, sim->plan,
                            ecic::run_trials(sim->config, trials, threads));
        out->trials = s.trials;
        out->decode_successes = s.decode_successes;
        out->mean_rate1 = s.mean_rate[0];
        out->mean_rate2 = s.mean_rate[1];
        out->mean_total_slots = s.mean_total_slots;
        out->mean_phase1_slots = s.mean_phase_slots[0];
        out->mean_phase2_slots = s.mean_phase_slots[1];
        out->mean_phase3_slots = s.mean_phase_slots[2];
        out->err_phase1_overrun = s.err_phase1_overrun;
        out->err_queue_overflow = s.err_queue_overflow;
        out->err_overhear_shortfall = s.err_overhear_shortfall;
        out->err_decode_failure = s.err_decode_failure;
        out->wrong_decodes = s.wrong_decodes;
        out->outer_bound_violations = s.outer_bound_violations;
        out->inconsistent_trials = s.inconsistent_trials;
        out->theory_rate = s.theory_rate;
        out->theory_slots = s.theory_slots;
        return ECIC_OK;
    });
}

int ecic_sim_plan(const ecic_sim* sim, int64_t* phase1_slots, int64_t* phase2_slots,
                  int64_t* phase3_slots, int64_t* slack_unit) {
    if (!sim) return ECIC_ERR_INVALID;
    if (phase1_slots) *phase1_slots = sim->plan.phase1_slots;
    if (phase2_slots) *phase2_slots = sim->plan.phase2_slots;
    if (phase3_slots) *phase3_slots = sim->plan.phase3_slots;
    if (slack_unit) *slack_unit = sim->plan.delta;
    return ECIC_OK;
}

}  // extern "C"

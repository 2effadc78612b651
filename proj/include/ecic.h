/*
 * ecic — two-user erasure interference channel laboratory with delayed,
 * spatially correlated transmitter CSI.
 *
 * C interface to the shared library: plain functions for the closed-form
 * analytics, opaque handles for stateful objects. Every function returns an
 * ECIC_* status code; out-parameters are written only on ECIC_OK.
 */
#ifndef ECIC_H
#define ECIC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    ECIC_OK = 0,
    ECIC_ERR_DOMAIN = 1,      /* parameter outside its mathematical domain */
    ECIC_ERR_INFEASIBLE = 2,  /* (p, rho) admits no joint link law */
    ECIC_ERR_DEGENERATE = 3,  /* p = 0 where a positive rate is required */
    ECIC_ERR_BUDGET = 4,      /* exhaustive enumeration budget exceeded */
    ECIC_ERR_EMPTY_GRID = 5,  /* no feasible grid point */
    ECIC_ERR_INVALID = 6,     /* null pointer / malformed argument */
    ECIC_ERR_INTERNAL = 7
};

const char* ecic_version(void);
const char* ecic_strerror(int code);

/* ---- joint link law and closed-form analytics ---- */

typedef struct {
    double p;           /* marginal on-probability of each link */
    double rho;         /* correlation between a transmitter's two links */
    double both_off;
    double cross_only;
    double direct_only;
    double both_on;
} ecic_joint_dist;

int ecic_joint_distribution(double p, double rho, ecic_joint_dist* out);
int ecic_feasible_interval(double rho, double* lo, double* hi);
int ecic_rate_weight(double p, double rho, double* weight);
int ecic_max_symmetric_rate(double p, double rho, double* rate);
int ecic_sum_rate(double p, double rho, double* sum_rate);
/* |p * weight - (1 - both_off)| */
int ecic_identity_residual(double p, double rho, double* residual);

/* ---- capacity region ---- */

typedef struct ecic_region ecic_region;

int ecic_region_create(double p, double rho, ecic_region** out);
void ecic_region_destroy(ecic_region* region);
/* Four half-planes a*R1 + b*R2 <= c, index 0..3. */
int ecic_region_constraint(const ecic_region* region, int index, double* a, double* b,
                           double* c);
int ecic_region_contains(const ecic_region* region, double r1, double r2, double tol,
                         int* inside);
int ecic_region_slacks(const ecic_region* region, double r1, double r2, double slacks[4]);
int ecic_region_max_symmetric_rate(const ecic_region* region, double* rate);
/* Boundary polyline from the (p,0) side to the (0,p) side as r1,r2 pairs.
 * capacity counts doubles; *written is the number of doubles stored. */
int ecic_region_boundary(const ecic_region* region, int resolution, double* xy,
                         size_t capacity, size_t* written);

/* ---- extremal entropy inequality checks ---- */

int ecic_outer_bound_check(double p, double rho, double r1, double r2, double tol,
                           int* inside, double slacks[4]);

typedef struct {
    double min_margin;
    uint64_t encoders_checked;
} ecic_lemma_report;

/* All deterministic single-slot encoder pairs with m1/m2 message bits.
 * argmin_buf (optional) receives a compact description of the minimizer. */
int ecic_lemma_scan_single_slot(double p, double rho, int m1, int m2,
                                ecic_lemma_report* out, char* argmin_buf,
                                size_t argmin_cap);
/* Seeded random two-slot encoder tables, one message bit per user. */
int ecic_lemma_scan_two_slot(double p, double rho, uint64_t samples, uint64_t seed,
                             int full_csit, ecic_lemma_report* out, char* argmin_buf,
                             size_t argmin_cap);

/* ---- three-phase protocol Monte Carlo ---- */

enum { ECIC_POLICY_PAPER_LITERAL = 0, ECIC_POLICY_BUDGET_MATCHED = 1 };
enum { ECIC_PHASE1_INVERSE_DEPARTURE = 0, ECIC_PHASE1_PRINTED_TEXT = 1 };

typedef struct {
    int64_t message_bits;
    double p;
    double rho;
    uint64_t seed;
    int policy;
    int phase1_rule;
    /* concentration-slack multipliers, in units of ceil(m^(2/3)) */
    double slack_phase1;
    double slack_drain_sigmas;
    double slack_padding;
    double slack_combine;
    double slack_duration;
    double slack_phase3_rows;
    double slack_known_bits;
    double slack_deficit;
    double slack_budget;
} ecic_sim_config;

void ecic_sim_config_init(ecic_sim_config* cfg);

typedef struct {
    int trials;
    int decode_successes;
    double mean_rate1;
    double mean_rate2;
    double mean_total_slots;
    double mean_phase1_slots;
    double mean_phase2_slots;
    double mean_phase3_slots;
    double err_phase1_overrun;
    double err_queue_overflow;
    double err_overhear_shortfall;
    double err_decode_failure;
    int64_t wrong_decodes;
    int64_t outer_bound_violations;
    int64_t inconsistent_trials;
    double theory_rate;
    double theory_slots;
} ecic_sim_summary;

typedef struct ecic_sim ecic_sim;

int ecic_sim_create(const ecic_sim_config* cfg, ecic_sim** out);
void ecic_sim_destroy(ecic_sim* sim);
int ecic_sim_run(ecic_sim* sim, int trials, int threads, ecic_sim_summary* out);
/* Deterministic per-phase slot schedule and slack unit of the configured plan. */
int ecic_sim_plan(const ecic_sim* sim, int64_t* phase1_slots, int64_t* phase2_slots,
                  int64_t* phase3_slots, int64_t* slack_unit);

#ifdef __cplusplus
}
#endif

#endif /* ECIC_H */

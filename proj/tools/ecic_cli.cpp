// Command-line front end for the ecic shared library. Subcommands cover the
// analytic region computations, the extremal-inequality checks, and the
// three-phase protocol Monte Carlo; results go to CSV and/or JSON files with
// the (seed, config hash, version) triple embedded, so reruns with the same
// triple reproduce byte-identical numeric payloads.
//
// Exit codes: 0 success, 1 a verification or soundness threshold failed,
// 2 usage or configuration error.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecic.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
    return buf;
}

struct Emitter {
    std::string base;
    std::string format;  // csv | json | both
    std::uint64_t seed = 0;
    std::string config_hash;

    bool want_csv() const { return format == "csv" || format == "both"; }
    bool want_json() const { return format == "json" || format == "both"; }

    bool write_csv(const std::string& header, const std::vector<std::string>& rows) const {
        if (!want_csv()) return true;
        std::ofstream out(base + ".csv");
        if (!out) {
            std::cerr << "cannot open " << base << ".csv for writing\n";
            return false;
        }
        out << "# ecic_version=" << ecic_version() << "\n";
        out << "# seed=" << seed << "\n";
        out << "# config_hash=" << config_hash << "\n";
        out << header << "\n";
        for (const auto& row : rows) out << row << "\n";
        return true;
    }

    bool write_json(json doc) const {
        if (!want_json()) return true;
        doc["meta"] = {{"ecic_version", ecic_version()},
                       {"seed", seed},
                       {"config_hash", config_hash}};
        std::ofstream out(base + ".json");
        if (!out) {
            std::cerr << "cannot open " << base << ".json for writing\n";
            return false;
        }
        out << doc.dump(2) << "\n";
        return true;
    }
};

int fail_code(int rc, const char* what) {
    std::cerr << what << ": " << ecic_strerror(rc) << "\n";
    return kExitUsage;
}

// ---- region ----

int cmd_region(double p, const std::vector<double>& rhos, int resolution, Emitter emit) {
    std::string cfg = "region|p=" + fmt(p) + "|res=" + std::to_string(resolution);
    for (double r : rhos) cfg += "|rho=" + fmt(r);
    emit.config_hash = hex64(fnv1a(cfg));

    std::vector<std::string> rows;
    json jregions = json::array();
    bool any = false;
    for (double rho : rhos) {
        ecic_region* region = nullptr;
        const int rc = ecic_region_create(p, rho, &region);
        if (rc != ECIC_OK) {
            std::cerr << "skipping rho=" << rho << ": " << ecic_strerror(rc) << "\n";
            continue;
        }
        any = true;
        std::vector<double> xy(static_cast<std::size_t>(4 * resolution + 64));
        std::size_t written = 0;
        ecic_region_boundary(region, resolution, xy.data(), xy.size(), &written);
        json jpoints = json::array();
        for (std::size_t i = 0; i + 1 < written; i += 2) {
            rows.push_back(fmt(rho) + "," + fmt(xy[i]) + "," + fmt(xy[i + 1]));
            jpoints.push_back({xy[i], xy[i + 1]});
        }
        double rate = 0.0;
        ecic_region_max_symmetric_rate(region, &rate);
        jregions.push_back({{"rho", rho},
                            {"max_symmetric_rate", rate},
                            {"points", std::move(jpoints)}});
        ecic_region_destroy(region);
    }
    if (!any) {
        std::cerr << "no feasible rho entry\n";
        return kExitUsage;
    }
    json doc;
    doc["config"] = {{"p", p}, {"rho", rhos}, {"resolution", resolution}};
    doc["regions"] = std::move(jregions);
    if (!emit.write_csv("rho,R1,R2", rows) || !emit.write_json(std::move(doc)))
        return kExitUsage;
    return kExitOk;
}

// ---- sumrate-sweep ----

int cmd_sumrate(const std::vector<double>& rhos, double p_step,
                const std::vector<double>& explicit_p, Emitter emit) {
    std::string cfg = "sweep|step=" + fmt(p_step);
    for (double r : rhos) cfg += "|rho=" + fmt(r);
    for (double p : explicit_p) cfg += "|p=" + fmt(p);
    emit.config_hash = hex64(fnv1a(cfg));

    std::vector<std::string> rows;
    json jcurves = json::array();
    for (double rho : rhos) {
        double lo = 0.0, hi = 1.0;
        int rc = ecic_feasible_interval(rho, &lo, &hi);
        if (rc != ECIC_OK) return fail_code(rc, "feasible interval");

        std::vector<double> grid;
        if (!explicit_p.empty()) {
            grid = explicit_p;
        } else {
            grid.push_back(lo);
            for (double p = std::ceil(lo / p_step) * p_step; p < hi - 1e-9; p += p_step) {
                if (p > lo + 1e-9) grid.push_back(p);
            }
            if (hi > lo + 1e-9) grid.push_back(hi);
        }

        json jpoints = json::array();
        json jskipped = json::array();
        int feasible = 0;
        for (double p : grid) {
            double sum = 0.0;
            rc = ecic_sum_rate(p, rho, &sum);
            if (rc != ECIC_OK) {
                jskipped.push_back(p);
                continue;
            }
            ++feasible;
            rows.push_back(fmt(rho) + "," + fmt(p) + "," + fmt(sum));
            jpoints.push_back({{"p", p}, {"sum_rate", sum}});
        }
        if (feasible == 0) {
            std::cerr << "no feasible p for rho=" << rho << "\n";
            return kExitUsage;
        }
        jcurves.push_back(
            {{"rho", rho}, {"points", std::move(jpoints)}, {"skipped", std::move(jskipped)}});
    }
    json doc;
    doc["config"] = {{"rho", rhos}, {"p_step", p_step}, {"p", explicit_p}};
    doc["curves"] = std::move(jcurves);
    if (!emit.write_csv("rho,p,sum_rate", rows) || !emit.write_json(std::move(doc)))
        return kExitUsage;
    return kExitOk;
}

// ---- simulate ----

int cmd_simulate(const std::vector<double>& ps, const std::vector<double>& rhos,
                 std::int64_t m, int trials, std::uint64_t seed, const std::string& policy,
                 const std::string& phase1_rule, int threads, Emitter emit) {
    std::string cfg = "simulate|m=" + std::to_string(m) + "|trials=" + std::to_string(trials) +
                      "|seed=" + std::to_string(seed) + "|policy=" + policy +
                      "|phase1=" + phase1_rule;
    for (double p : ps) cfg += "|p=" + fmt(p);
    for (double r : rhos) cfg += "|rho=" + fmt(r);
    emit.config_hash = hex64(fnv1a(cfg));
    emit.seed = seed;

    std::vector<std::string> rows;
    json jpoints = json::array();
    bool any = false;
    bool violation = false;
    for (double p : ps) {
        for (double rho : rhos) {
            ecic_sim_config sim_cfg;
            ecic_sim_config_init(&sim_cfg);
            sim_cfg.message_bits = m;
            sim_cfg.p = p;
            sim_cfg.rho = rho;
            sim_cfg.seed = seed;
            sim_cfg.policy = policy == "budget-matched" ? ECIC_POLICY_BUDGET_MATCHED
                                                        : ECIC_POLICY_PAPER_LITERAL;
            sim_cfg.phase1_rule = phase1_rule == "printed-text"
                                      ? ECIC_PHASE1_PRINTED_TEXT
                                      : ECIC_PHASE1_INVERSE_DEPARTURE;
            ecic_sim* sim = nullptr;
            int rc = ecic_sim_create(&sim_cfg, &sim);
            if (rc != ECIC_OK) {
                std::cerr << "skipping (p=" << p << ", rho=" << rho
                          << "): " << ecic_strerror(rc) << "\n";
                continue;
            }
            any = true;
            ecic_sim_summary s;
            rc = ecic_sim_run(sim, trials, threads, &s);
            ecic_sim_destroy(sim);
            if (rc != ECIC_OK) return fail_code(rc, "simulation run");

            // Soundness gates: no decode may contradict the message and no
            // achieved rate may beat the outer bound.
            violation = violation || s.wrong_decodes > 0 || s.outer_bound_violations > 0 ||
                        s.inconsistent_trials > 0;

            double weight = 0.0;
            ecic_rate_weight(p, rho, &weight);
            json jcorners = json::array();
            ecic_region* region = nullptr;
            if (ecic_region_create(p, rho, &region) == ECIC_OK) {
                double xy[64];
                std::size_t written = 0;
                if (ecic_region_boundary(region, 2, xy, 64, &written) == ECIC_OK) {
                    for (std::size_t i = 0; i + 1 < written; i += 2)
                        jcorners.push_back({xy[i], xy[i + 1]});
                }
                ecic_region_destroy(region);
            }
            int mean_point_inside = 1;
            ecic_outer_bound_check(p, rho, s.mean_rate1, s.mean_rate2, 1e-9,
                                   &mean_point_inside, nullptr);

            rows.push_back(fmt(p) + "," + fmt(rho) + "," + std::to_string(m) + "," +
                           std::to_string(trials) + "," + policy + "," + fmt(s.mean_rate1) +
                           "," + fmt(s.mean_rate2) + "," + fmt(s.theory_rate) + "," +
                           fmt(s.mean_total_slots) + "," + fmt(s.theory_slots) + "," +
                           fmt(s.err_phase1_overrun) + "," + fmt(s.err_queue_overflow) + "," +
                           fmt(s.err_overhear_shortfall) + "," + fmt(s.err_decode_failure));
            jpoints.push_back({{"p", p},
                               {"rho", rho},
                               {"rate_weight", weight},
                               {"region_corners", std::move(jcorners)},
                               {"decode_successes", s.decode_successes},
                               {"mean_rate", {s.mean_rate1, s.mean_rate2}},
                               {"mean_rate_inside_region", mean_point_inside == 1},
                               {"theory_rate", s.theory_rate},
                               {"mean_slots", s.mean_total_slots},
                               {"theory_slots", s.theory_slots},
                               {"mean_phase_slots",
                                {s.mean_phase1_slots, s.mean_phase2_slots, s.mean_phase3_slots}},
                               {"err_I", s.err_phase1_overrun},
                               {"err_II", s.err_queue_overflow},
                               {"err_III", s.err_overhear_shortfall},
                               {"decode_fail", s.err_decode_failure},
                               {"wrong_decodes", s.wrong_decodes},
                               {"outer_bound_violations", s.outer_bound_violations}});
        }
    }
    if (!any) {
        std::cerr << "no feasible (p, rho) point\n";
        return kExitUsage;
    }
    json doc;
    doc["config"] = {{"p", ps},           {"rho", rhos},   {"m", m},
                     {"trials", trials},  {"seed", seed},  {"policy", policy},
                     {"phase1_rule", phase1_rule}};
    doc["points"] = std::move(jpoints);
    if (!emit.write_csv("p,rho,m,trials,policy,mean_rate1,mean_rate2,theory_rate,mean_slots,"
                        "theory_slots,err_I,err_II,err_III,decode_fail",
                        rows) ||
        !emit.write_json(std::move(doc)))
        return kExitUsage;
    return violation ? kExitViolation : kExitOk;
}

// ---- verify-lemma ----

int cmd_verify_lemma(std::vector<double> ps, std::vector<double> rhos, int block_length,
                     std::uint64_t samples, std::uint64_t seed, Emitter emit) {
    if (ps.empty()) ps = {0.25, 0.5, 0.75};
    if (rhos.empty()) rhos = {-0.5, 0.0, 0.5, 1.0};
    std::string cfg = "lemma|n=" + std::to_string(block_length) +
                      "|samples=" + std::to_string(samples) + "|seed=" + std::to_string(seed);
    for (double p : ps) cfg += "|p=" + fmt(p);
    for (double r : rhos) cfg += "|rho=" + fmt(r);
    emit.config_hash = hex64(fnv1a(cfg));
    emit.seed = seed;

    std::vector<std::string> rows;
    json jpoints = json::array();
    double worst = 1e300;
    for (double p : ps) {
        for (double rho : rhos) {
            double lo, hi;
            if (ecic_feasible_interval(rho, &lo, &hi) != ECIC_OK) continue;
            if (p < lo - 1e-12 || p > hi + 1e-12 || p == 0.0) continue;

            char argmin[1024] = {0};
            ecic_lemma_report report;
            double point_min = 1e300;
            std::string point_argmin;
            const auto absorb = [&](int rc, const char* what) {
                if (rc != ECIC_OK) {
                    std::cerr << what << " failed at (p=" << p << ", rho=" << rho
                              << "): " << ecic_strerror(rc) << "\n";
                    return false;
                }
                if (report.min_margin < point_min) {
                    point_min = report.min_margin;
                    point_argmin = argmin;
                }
                return true;
            };
            if (!absorb(ecic_lemma_scan_single_slot(p, rho, 1, 1, &report, argmin,
                                                    sizeof argmin),
                        "single-slot scan"))
                continue;
            if (block_length >= 2 && samples > 0) {
                for (int full = 0; full <= 1; ++full) {
                    if (!absorb(ecic_lemma_scan_two_slot(p, rho, samples, seed, full, &report,
                                                         argmin, sizeof argmin),
                                "two-slot scan"))
                        continue;
                }
            }
            worst = std::min(worst, point_min);
            rows.push_back(fmt(p) + "," + fmt(rho) + "," + fmt(point_min));
            jpoints.push_back({{"p", p},
                               {"rho", rho},
                               {"min_margin", point_min},
                               {"argmin_encoder", point_argmin}});
        }
    }
    if (rows.empty()) {
        std::cerr << "no feasible grid point\n";
        return kExitUsage;
    }
    json doc;
    doc["config"] = {{"p", ps},
                     {"rho", rhos},
                     {"block_length", block_length},
                     {"samples", samples}};
    doc["points"] = std::move(jpoints);
    doc["min_margin"] = worst;
    doc["counterexample_found"] = worst < -1e-9;
    if (!emit.write_csv("p,rho,min_margin", rows) || !emit.write_json(std::move(doc)))
        return kExitUsage;
    if (worst < -1e-9) {
        std::cerr << "counterexample margin " << worst << "\n";
        return kExitViolation;
    }
    std::cout << "lemma holds on the grid; min margin " << fmt(worst) << "\n";
    return kExitOk;
}

// ---- check-identities ----

int cmd_check_identities(Emitter emit) {
    emit.config_hash = hex64(fnv1a("identities|default-grid"));
    std::vector<std::string> rows;
    json jpoints = json::array();
    double worst = 0.0;
    for (int k = 0; k <= 8; ++k) {
        const double rho = -1.0 + 0.25 * k;
        double lo, hi;
        if (ecic_feasible_interval(rho, &lo, &hi) != ECIC_OK) continue;
        double point_max = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double p = lo + (hi - lo) * i / 49.0;
            double residual = 0.0;
            if (ecic_identity_residual(p, rho, &residual) != ECIC_OK) continue;
            point_max = std::max(point_max, residual);
        }
        worst = std::max(worst, point_max);
        rows.push_back(fmt(rho) + "," + fmt(point_max));
        jpoints.push_back({{"rho", rho}, {"max_residual", point_max}});
    }
    json doc;
    doc["points"] = std::move(jpoints);
    doc["max_residual"] = worst;
    if (!emit.write_csv("rho,max_residual", rows) || !emit.write_json(std::move(doc)))
        return kExitUsage;
    if (worst >= 1e-12) {
        std::cerr << "identity residual " << worst << " exceeds 1e-12\n";
        return kExitViolation;
    }
    std::cout << "identities hold; max residual " << fmt(worst) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-user erasure interference channel laboratory"};
    app.require_subcommand(1);

    // region
    auto* region = app.add_subcommand("region", "capacity region boundaries");
    double region_p = 0.5;
    std::vector<double> region_rhos = {-1.0, 0.0, 1.0};
    int resolution = 129;
    std::string region_out = "region", region_format = "csv";
    region->add_option("--p", region_p, "link on-probability");
    region->add_option("--rho", region_rhos, "correlation coefficients")->expected(-1);
    region->add_option("--resolution", resolution, "boundary points per region")
        ->check(CLI::Range(2, 100000));
    region->add_option("--out", region_out, "output base path");
    region->add_option("--format", region_format)->check(CLI::IsMember({"csv", "json", "both"}));

    // sumrate-sweep
    auto* sweep = app.add_subcommand("sumrate-sweep", "maximum sum-rate over feasible p");
    std::vector<double> sweep_rhos = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<double> sweep_ps;
    double p_step = 0.05;
    std::string sweep_out = "sumrate", sweep_format = "csv";
    sweep->add_option("--rho", sweep_rhos, "correlation coefficients")->expected(-1);
    sweep->add_option("--p", sweep_ps, "explicit p grid (default: step over the feasible set)")
        ->expected(-1);
    sweep->add_option("--p-step", p_step)->check(CLI::Range(1e-4, 0.5));
    sweep->add_option("--out", sweep_out, "output base path");
    sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json", "both"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "three-phase protocol Monte Carlo");
    std::vector<double> sim_ps = {0.5};
    std::vector<double> sim_rhos = {0.0};
    std::int64_t m = 2000;
    int trials = 50;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string policy = "paper-literal", phase1_rule = "inverse-departure";
    std::string sim_out = "simulate", sim_format = "csv";
    simulate->add_option("--p", sim_ps, "link on-probabilities")->expected(-1);
    simulate->add_option("--rho", sim_rhos, "correlation coefficients")->expected(-1);
    simulate->add_option("--m", m, "message bits per user")->check(CLI::PositiveNumber);
    simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed);
    simulate->add_option("--policy", policy)
        ->check(CLI::IsMember({"paper-literal", "budget-matched"}));
    simulate->add_option("--phase1-rule", phase1_rule)
        ->check(CLI::IsMember({"inverse-departure", "printed-text"}));
    simulate->add_option("--threads", threads, "0 = hardware concurrency");
    simulate->add_option("--out", sim_out, "output base path");
    simulate->add_option("--format", sim_format)->check(CLI::IsMember({"csv", "json", "both"}));

    // verify-lemma
    auto* lemma = app.add_subcommand("verify-lemma", "extremal inequality falsification scan");
    std::vector<double> lemma_ps, lemma_rhos;
    int block_length = 2;
    std::uint64_t samples = 1000;
    std::uint64_t lemma_seed = 1;
    std::string lemma_out = "lemma", lemma_format = "csv";
    lemma->add_option("--p", lemma_ps, "grid p values (default 0.25 0.5 0.75)")->expected(-1);
    lemma->add_option("--rho", lemma_rhos, "grid correlations (default -0.5 0 0.5 1)")
        ->expected(-1);
    lemma->add_option("--n", block_length, "encoder block length budget (1 or 2)")
        ->check(CLI::Range(1, 2));
    lemma->add_option("--samples", samples, "random two-slot tables per point per class");
    lemma->add_option("--seed", lemma_seed);
    lemma->add_option("--out", lemma_out, "output base path");
    lemma->add_option("--format", lemma_format)->check(CLI::IsMember({"csv", "json", "both"}));

    // check-identities
    auto* ident = app.add_subcommand("check-identities", "per-letter coefficient identity");
    std::string ident_out = "identities", ident_format = "csv";
    ident->add_option("--out", ident_out, "output base path");
    ident->add_option("--format", ident_format)->check(CLI::IsMember({"csv", "json", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (region->parsed())
        return cmd_region(region_p, region_rhos, resolution,
                          {region_out, region_format, 0, ""});
    if (sweep->parsed())
        return cmd_sumrate(sweep_rhos, p_step, sweep_ps, {sweep_out, sweep_format, 0, ""});
    if (simulate->parsed())
        return cmd_simulate(sim_ps, sim_rhos, m, trials, seed, policy, phase1_rule, threads,
                            {sim_out, sim_format, seed, ""});
    if (lemma->parsed())
        return cmd_verify_lemma(lemma_ps, lemma_rhos, block_length, samples, lemma_seed,
                                {lemma_out, lemma_format, lemma_seed, ""});
    if (ident->parsed()) return cmd_check_identities({ident_out, ident_format, 0, ""});
    return kExitUsage;
}

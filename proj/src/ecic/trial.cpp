#include "ecic/trial.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ecic/entropy_lab.hpp"
#include "ecic/linear_system.hpp"
#include "ecic/parity_uf.hpp"

namespace ecic {

namespace {

bool gain(const GainNibble& g, int tx, int rx) {
    if (rx == 0) return tx == 0 ? g.g11() : g.g21();
    return tx == 0 ? g.g12() : g.g22();
}

// XOR of the payload rows selected by the combination mask, as one functional
// over the queue columns; value comes from the same mask against the row pool.
BitVec compose(const PhasePayload& payload, const BitVec& mask, std::int64_t queue_width) {
    BitVec out(static_cast<std::size_t>(queue_width));
    mask.for_each_set([&](std::size_t r) { out.xor_with(payload.functionals.row(r)); });
    return out;
}

}  // namespace

TrialContext run_phases(const ProtocolConfig& cfg, const PhasePlan& plan,
                        std::uint64_t trial) {
    TrialContext ctx;
    ctx.plan = plan;

    RngStream channel_rng(cfg.seed, StreamRole::channel, {trial});
    ctx.trace = sample_channel_trace(plan.dist, plan.total_slots(), channel_rng);
    for (int i = 0; i < 2; ++i) {
        RngStream msg_rng(cfg.seed, StreamRole::message, {trial, static_cast<std::uint64_t>(i)});
        ctx.message[i] = BitVec(static_cast<std::size_t>(plan.message_bits));
        ctx.message[i].fill_random(msg_rng);
    }

    ctx.phase1 = run_phase1(plan, ctx.trace);

    const std::int64_t t1 = plan.phase1_slots;
    for (int rx = 0; rx < 2; ++rx) ctx.observations[rx].assign(plan.total_slots(), 0);
    for (std::int64_t t = 0; t < t1; ++t) {
        for (int rx = 0; rx < 2; ++rx) {
            bool y = false;
            for (int i = 0; i < 2; ++i) {
                const std::int32_t b = ctx.phase1.tx[i].sent_bit[t];
                if (b >= 0 && gain(ctx.trace.slots[t], i, rx)) y ^= ctx.message[i].get(b);
            }
            ctx.observations[rx][t] = y ? 1 : 0;
        }
    }

    if (ctx.phase1.overrun || ctx.phase1.overflow) {
        ctx.halted_after_phase1 = true;
        return ctx;
    }

    PhasePayload phase2_payload[2], phase3_payload_[2];
    for (int i = 0; i < 2; ++i) {
        ctx.queues[i] = build_queue_vector(plan, ctx.phase1.tx[i], ctx.message[i]);
        const CodedMatrices mats = build_coded_matrices(plan, cfg.seed, trial, i);
        phase2_payload[i] = combine_phase2(plan, mats, ctx.queues[i]);
        phase3_payload_[i] = phase3_payload(plan, mats, ctx.queues[i]);
    }

    // Retransmission phases: every slot each active transmitter sends a fresh
    // random combination; receivers log the composed functional.
    const auto run_segment = [&](std::int64_t first_slot, std::int64_t slots,
                                 std::vector<BitVec>* functionals, bool fresh,
                                 const PhasePayload* payloads, StreamRole role) {
        RngStream streams[2] = {
            RngStream(cfg.seed, role, {trial, 0}),
            RngStream(cfg.seed, role, {trial, 1}),
        };
        for (int i = 0; i < 2; ++i) functionals[i].reserve(slots);
        for (std::int64_t s = 0; s < slots; ++s) {
            const std::int64_t t = first_slot + s;
            bool x[2] = {false, false};
            bool active[2] = {false, false};
            for (int i = 0; i < 2; ++i) {
                const std::int64_t width = ctx.queues[i].width();
                if (fresh) {
                    if (width == 0) {
                        functionals[i].emplace_back();
                        continue;
                    }
                    BitVec f(static_cast<std::size_t>(width));
                    f.fill_random(streams[i]);
                    x[i] = f.dot(ctx.queues[i].values);
                    active[i] = true;
                    functionals[i].push_back(std::move(f));
                } else {
                    const std::int64_t rows = payloads[i].rows();
                    if (rows == 0) {
                        functionals[i].emplace_back();
                        continue;
                    }
                    BitVec mask(static_cast<std::size_t>(rows));
                    mask.fill_random(streams[i]);
                    x[i] = mask.dot(payloads[i].row_values);
                    active[i] = true;
                    functionals[i].push_back(compose(payloads[i], mask, width));
                }
            }
            for (int rx = 0; rx < 2; ++rx) {
                bool y = false;
                for (int i = 0; i < 2; ++i) {
                    if (active[i] && gain(ctx.trace.slots[t], i, rx)) y ^= x[i];
                }
                ctx.observations[rx][t] = y ? 1 : 0;
            }
        }
    };

    run_segment(t1, plan.phase2_slots, ctx.phase2_functionals, false, phase2_payload,
                StreamRole::multicast_coefficients);
    const bool fresh = plan.phase3_mode == Phase3Mode::fresh_combined;
    run_segment(t1 + plan.phase2_slots, plan.phase3_slots, ctx.phase3_functionals, fresh,
                phase3_payload_, StreamRole::phase3_coefficients);
    return ctx;
}

DecodeResult decode(const TrialContext& ctx, int rx) {
    const std::int64_t m = ctx.plan.message_bits;
    const std::int64_t ids = 2 * m;
    ParityUnionFind uf(static_cast<std::size_t>(ids));
    bool ok = true;

    // Phase-1 observations touch at most one bit per transmitter: singles
    // assign, pairs merge with the observed XOR.
    const std::int64_t t1 = ctx.plan.phase1_slots;
    for (std::int64_t t = 0; t < t1; ++t) {
        std::int64_t terms[2];
        int n_terms = 0;
        for (int i = 0; i < 2; ++i) {
            const std::int32_t b = ctx.phase1.tx[i].sent_bit[t];
            if (b >= 0 && gain(ctx.trace.slots[t], i, rx)) terms[n_terms++] = i * m + b;
        }
        const bool y = ctx.observations[rx][t] != 0;
        if (n_terms == 0) {
            ok = ok && !y;
        } else if (n_terms == 1) {
            ok = ok && uf.assign(terms[0], y);
        } else {
            ok = ok && uf.merge(terms[0], terms[1], y);
        }
    }

    // Dense pass: retransmission equations over the unresolved component
    // roots. First enumerate the root columns, then materialize rows.
    struct Contribution {
        std::int64_t t;
        const BitVec* functional[2];
    };
    std::vector<Contribution> contribs;
    const auto collect = [&](std::int64_t first_slot, const std::vector<BitVec>* functionals) {
        for (std::size_t s = 0; s < functionals[0].size() || s < functionals[1].size(); ++s) {
            Contribution c{first_slot + static_cast<std::int64_t>(s), {nullptr, nullptr}};
            bool any = false;
            for (int i = 0; i < 2; ++i) {
                if (s < functionals[i].size() && functionals[i][s].size() > 0 &&
                    gain(ctx.trace.slots[c.t], i, rx)) {
                    c.functional[i] = &functionals[i][s];
                    any = true;
                }
            }
            if (any)
                contribs.push_back(c);
            else
                ok = ok && ctx.observations[rx][c.t] == 0;
        }
    };
    if (!ctx.halted_after_phase1) {
        collect(t1, ctx.phase2_functionals);
        collect(t1 + ctx.plan.phase2_slots, ctx.phase3_functionals);
    }

    std::vector<std::int32_t> root_col(static_cast<std::size_t>(ids), -1);
    std::vector<std::int64_t> col_root;
    for (const auto& c : contribs) {
        for (int i = 0; i < 2; ++i) {
            if (!c.functional[i]) continue;
            c.functional[i]->for_each_set([&](std::size_t col) {
                const std::int32_t mid = ctx.queues[i].column_message[col];
                if (mid < 0) return;  // padding: known zero
                const std::int64_t id = static_cast<std::int64_t>(i) * m + mid;
                if (uf.has_value(id)) return;
                const auto [root, par] = uf.find(id);
                (void)par;
                if (root_col[root] < 0) {
                    root_col[root] = static_cast<std::int32_t>(col_root.size());
                    col_root.push_back(root);
                }
            });
        }
    }

    EquationSystem sys(col_root.size());
    for (const auto& c : contribs) {
        BitVec row(col_root.size());
        bool rhs = ctx.observations[rx][c.t] != 0;
        for (int i = 0; i < 2; ++i) {
            if (!c.functional[i]) continue;
            c.functional[i]->for_each_set([&](std::size_t col) {
                const std::int32_t mid = ctx.queues[i].column_message[col];
                if (mid < 0) return;
                const std::int64_t id = static_cast<std::int64_t>(i) * m + mid;
                if (uf.has_value(id)) {
                    rhs ^= uf.value(id);
                    return;
                }
                const auto [root, par] = uf.find(id);
                rhs ^= par;
                row.flip(root_col[root]);
            });
        }
        if (!row.any()) {
            ok = ok && !rhs;
            continue;
        }
        sys.add(std::move(row), rhs);
    }

    const SolveOutcome solved = solve_determined(sys);
    ok = ok && solved.consistent;
    if (solved.consistent) {
        for (std::size_t col = 0; col < col_root.size(); ++col) {
            if (solved.determined(col)) ok = ok && uf.assign(col_root[col], solved.value(col));
        }
    }

    DecodeResult out;
    out.decoded = BitVec(static_cast<std::size_t>(m));
    bool all = true;
    for (std::int64_t b = 0; b < m; ++b) {
        const std::int64_t id = static_cast<std::int64_t>(rx) * m + b;
        if (uf.has_value(id)) {
            out.decoded.set(b, uf.value(id));
        } else {
            all = false;
        }
    }
    out.inconsistent = !ok;
    out.success = all && ok;
    return out;
}

TrialResult run_trial(const ProtocolConfig& cfg, const PhasePlan& plan, std::uint64_t trial) {
    TrialContext ctx = run_phases(cfg, plan, trial);
    TrialResult r;
    r.phase1_slots = plan.phase1_slots;
    r.flags.phase1_overrun = ctx.phase1.overrun;
    r.flags.queue_overflow = ctx.phase1.overflow;
    r.flags.overhear_shortfall = ctx.phase1.shortfall;
    for (int i = 0; i < 2; ++i) {
        r.queue_sizes[i][0] = static_cast<std::int64_t>(ctx.phase1.tx[i].arrived_both.size());
        r.queue_sizes[i][1] = static_cast<std::int64_t>(ctx.phase1.tx[i].cross_only.size());
        r.known_counts[i][0] = ctx.phase1.tx[i].known_to_other[0];
        r.known_counts[i][1] = ctx.phase1.tx[i].known_to_other[1];
    }

    if (ctx.halted_after_phase1) {
        r.total_slots = plan.phase1_slots;
        r.flags.decode_failure = true;
        return r;
    }
    r.phase2_slots = plan.phase2_slots;
    r.phase3_slots = plan.phase3_slots;
    r.total_slots = plan.total_slots();

    bool all_ok = true;
    for (int rx = 0; rx < 2; ++rx) {
        const DecodeResult d = decode(ctx, rx);
        r.flags.inconsistent = r.flags.inconsistent || d.inconsistent;
        r.decoded_ok[rx] = d.success && d.decoded == ctx.message[rx];
        r.wrong_decode[rx] = d.success && d.decoded != ctx.message[rx];
        all_ok = all_ok && r.decoded_ok[rx];
        if (r.decoded_ok[rx]) {
            r.achieved_rate[rx] = static_cast<double>(plan.message_bits) /
                                  static_cast<double>(r.total_slots);
        }
    }
    r.flags.decode_failure = !all_ok;
    if (all_ok) {
        const OuterBoundVerdict v = outer_bound_check({r.achieved_rate[0], r.achieved_rate[1]},
                                                      cfg.p, cfg.rho, 1e-9);
        r.outer_bound_ok = v.inside;
    }
    return r;
}

std::vector<TrialResult> run_trials(const ProtocolConfig& cfg, int trials, int threads) {
    const PhasePlan plan = make_phase_plan(cfg);
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, trials));

    std::atomic<int> next{0};
    const auto worker = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= trials) return;
            results[idx] = run_trial(cfg, plan, static_cast<std::uint64_t>(idx));
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

SimulationSummary summarize(const ProtocolConfig& cfg, const PhasePlan& plan,
                            const std::vector<TrialResult>& results) {
    (void)cfg;
    SimulationSummary s;
    s.trials = static_cast<int>(results.size());
    s.theory_rate = plan.theory_rate;
    s.theory_slots = plan.theory_slots;
    double rate_sum[2] = {0.0, 0.0};
    for (const TrialResult& r : results) {
        s.mean_total_slots += static_cast<double>(r.total_slots);
        s.mean_phase_slots[0] += static_cast<double>(r.phase1_slots);
        s.mean_phase_slots[1] += static_cast<double>(r.phase2_slots);
        s.mean_phase_slots[2] += static_cast<double>(r.phase3_slots);
        s.err_phase1_overrun += r.flags.phase1_overrun ? 1 : 0;
        s.err_queue_overflow += r.flags.queue_overflow ? 1 : 0;
        s.err_overhear_shortfall += r.flags.overhear_shortfall ? 1 : 0;
        s.err_decode_failure += r.flags.decode_failure ? 1 : 0;
        s.inconsistent_trials += r.flags.inconsistent ? 1 : 0;
        s.wrong_decodes += (r.wrong_decode[0] ? 1 : 0) + (r.wrong_decode[1] ? 1 : 0);
        if (!r.flags.decode_failure) {
            ++s.decode_successes;
            rate_sum[0] += r.achieved_rate[0];
            rate_sum[1] += r.achieved_rate[1];
            if (!r.outer_bound_ok) ++s.outer_bound_violations;
        }
    }
    const double n = std::max(1, s.trials);
    s.mean_total_slots /= n;
    for (double& v : s.mean_phase_slots) v /= n;
    s.err_phase1_overrun /= n;
    s.err_queue_overflow /= n;
    s.err_overhear_shortfall /= n;
    s.err_decode_failure /= n;
    if (s.decode_successes > 0) {
        s.mean_rate[0] = rate_sum[0] / s.decode_successes;
        s.mean_rate[1] = rate_sum[1] / s.decode_successes;
    }
    return s;
}

SimulationSummary run_simulation(const ProtocolConfig& cfg, int trials, int threads) {
    const PhasePlan plan = make_phase_plan(cfg);
    return summarize(cfg, plan, run_trials(cfg, trials, threads));
}

}  // namespace ecic

#include <cmath>
#include <map>
#include <tuple>

#include "doctest.h"
#include "ecic/entropy_lab.hpp"
#include "ecic/errors.hpp"

using namespace ecic;

namespace {

// Independent oracle: H(Y | W2, G) = H(Y, W2, G) - H(W2, G), accumulated from
// the explicit joint pmf rather than per-condition histograms.
double oracle_conditional_entropy(const EncoderTable& enc, const LinkPairDistribution& dist,
                                  int receiver) {
    const int n = enc.block_length();
    const int m1 = enc.message_bits(0);
    const int m2 = enc.message_bits(1);
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, double> joint;
    std::map<std::tuple<std::uint32_t, std::uint64_t>, double> cond;

    const std::uint64_t g_total = std::uint64_t{1} << (4 * n);
    for (std::uint64_t seq = 0; seq < g_total; ++seq) {
        std::vector<GainNibble> states(n);
        double pg = 1.0;
        for (int t = 0; t < n; ++t) {
            states[t].bits = static_cast<std::uint8_t>((seq >> (4 * t)) & 0xF);
            const auto pair_prob = [&](int tx) {
                const auto code = states[t].local_pair(tx);
                return dist.cell((code >> 1) & 1, code & 1);
            };
            pg *= pair_prob(0) * pair_prob(1);
        }
        if (pg == 0.0) continue;
        for (std::uint32_t w2 = 0; w2 < (1u << m2); ++w2) {
            for (std::uint32_t w1 = 0; w1 < (1u << m1); ++w1) {
                std::uint32_t y = 0;
                for (int t = 0; t < n; ++t) {
                    const bool x1 = enc.emit(0, t, w1, enc.history_index(0, states, t));
                    const bool x2 = enc.emit(1, t, w2, enc.history_index(1, states, t));
                    const GainNibble g = states[t];
                    const bool bit = receiver == 0 ? ((g.g11() && x1) ^ (g.g21() && x2))
                                                   : ((g.g12() && x1) ^ (g.g22() && x2));
                    y = (y << 1) | bit;
                }
                const double prob = pg / ((1u << m1) * (1u << m2));
                joint[{y, w2, seq}] += prob;
                cond[{w2, seq}] += prob;
            }
        }
    }
    const auto entropy = [](const auto& pmf) {
        double h = 0.0;
        for (const auto& [key, p] : pmf) {
            if (p > 0) h -= p * std::log2(p);
        }
        return h;
    };
    return entropy(joint) - entropy(cond);
}

}  // namespace

TEST_CASE("single-slot uncoded transmission leaves half a bit at each receiver") {
    for (double rho : {-1.0, 0.0, 0.5}) {
        const auto dist = LinkPairDistribution::solve(0.5, rho);
        const auto report = enumerate_entropy(EncoderTable::repeat_bit(1), dist);
        CHECK(report.h_y2_given_w2_g == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(report.h_y1_given_w2_g == doctest::Approx(0.5).epsilon(1e-12));
    }
    const auto iid = enumerate_entropy(EncoderTable::repeat_bit(1),
                                       LinkPairDistribution::solve(0.5, 0.0));
    CHECK(iid.margin == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("silent encoders carry no entropy and zero margin") {
    const auto dist = LinkPairDistribution::solve(0.5, 0.25);
    const auto report = enumerate_entropy(EncoderTable::silent(2, 1, 1), dist);
    CHECK(report.h_y1_given_w2_g == 0.0);
    CHECK(report.h_y2_given_w2_g == 0.0);
    CHECK(report.margin == 0.0);
}

TEST_CASE("two-slot repeat encoder matches the joint-pmf oracle") {
    const auto dist = LinkPairDistribution::solve(0.5, 0.5);
    const auto enc = EncoderTable::repeat_bit(2);
    const auto report = enumerate_entropy(enc, dist);
    CHECK(report.h_y1_given_w2_g ==
          doctest::Approx(oracle_conditional_entropy(enc, dist, 0)).epsilon(1e-12));
    CHECK(report.h_y2_given_w2_g ==
          doctest::Approx(oracle_conditional_entropy(enc, dist, 1)).epsilon(1e-12));
    // Both sequences stay ambiguous only when both of a transmitter's slots
    // were erased: 1 - q^2 of a bit survives.
    CHECK(report.h_y2_given_w2_g == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("random two-slot tables match the oracle") {
    RngStream rng(404);
    const auto dist = LinkPairDistribution::solve(0.5, -0.5);
    for (int i = 0; i < 4; ++i) {
        const auto enc = EncoderTable::random(2, 1, 1, i % 2 == 0, rng);
        const auto report = enumerate_entropy(enc, dist);
        CHECK(report.h_y1_given_w2_g ==
              doctest::Approx(oracle_conditional_entropy(enc, dist, 0)).epsilon(1e-12));
        CHECK(report.h_y2_given_w2_g ==
              doctest::Approx(oracle_conditional_entropy(enc, dist, 1)).epsilon(1e-12));
    }
}

TEST_CASE("entropies live in [0, n] and conditioning cannot raise them") {
    RngStream rng(2024);
    const auto dist = LinkPairDistribution::solve(0.5, 0.25);
    for (int i = 0; i < 12; ++i) {
        const auto enc = EncoderTable::random(2, 1, 1, false, rng);
        const auto report = enumerate_entropy(enc, dist);
        for (double h : {report.h_y1_given_w2_g, report.h_y2_given_w2_g}) {
            CHECK(h >= -1e-12);
            CHECK(h <= 2.0 + 1e-12);
        }
        for (int rx = 0; rx < 2; ++rx) {
            const double with_w2 = receiver_sequence_entropy(enc, dist, rx, true);
            const double without = receiver_sequence_entropy(enc, dist, rx, false);
            CHECK(with_w2 <= without + 1e-12);
        }
    }
}

TEST_CASE("enumeration budget is enforced") {
    const auto dist = LinkPairDistribution::solve(0.5, 0.0);
    CHECK_THROWS_AS(enumerate_entropy(EncoderTable::silent(5, 1, 1), dist), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_entropy(EncoderTable::silent(2, 3, 2), dist), BudgetExceeded);
}

TEST_CASE("per-letter identity holds exactly") {
    CHECK(check_identity(0.5, 0.0) < 1e-12);
    CHECK(check_identity(0.5, 1.0) < 1e-12);
    CHECK(check_identity(1.0, 1.0) < 1e-12);
}

TEST_CASE("outer bound verdicts") {
    const auto tight = outer_bound_check({0.5, 0.5}, 0.5, -1.0);
    CHECK(tight.inside);
    CHECK(tight.slacks[2] == doctest::Approx(0.0).epsilon(1e-12));

    const auto boundary = outer_bound_check({0.45, 0.45}, 0.5, 0.0);
    CHECK(boundary.inside);
    CHECK(std::abs(boundary.slacks[2]) < 1e-12);
    CHECK(std::abs(boundary.slacks[3]) < 1e-12);

    const auto outside = outer_bound_check({0.5, 0.5}, 0.5, 1.0);
    CHECK(!outside.inside);
    CHECK(outside.slacks[2] < 0.0);
}

TEST_CASE("single-slot scan finds no counterexample and is tight at zero") {
    const auto scan = scan_all_single_slot(0.5, 0.0, 1, 1);
    CHECK(scan.encoders_checked == 16);
    CHECK(scan.min_margin >= -1e-12);
    CHECK(scan.min_margin == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("random two-slot scan keeps nonnegative margins") {
    for (const bool full : {false, true}) {
        const auto scan = scan_random_two_slot(0.5, 0.25, 200, 99, full);
        CHECK(scan.encoders_checked == 200);
        CHECK(scan.min_margin >= -1e-9);
        REQUIRE(scan.argmin.has_value());
        CHECK(!scan.argmin->to_compact_string().empty());
    }
}

TEST_CASE("head-of-queue retransmission encoder satisfies the inequality") {
    for (double rho : {-0.5, 0.0, 0.5}) {
        const auto dist = LinkPairDistribution::solve(0.5, rho);
        CHECK(check_lemma(EncoderTable::phase1_automaton(2), dist) >= -1e-12);
    }
}

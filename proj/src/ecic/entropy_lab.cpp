#include "ecic/entropy_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ecic/errors.hpp"

namespace ecic {

namespace {

double pair_probability(const LinkPairDistribution& dist, std::uint8_t pair_code) {
    const bool direct_on = (pair_code >> 1) & 1;
    const bool cross_on = pair_code & 1;
    return dist.cell(direct_on, cross_on);
}

double nibble_probability(const LinkPairDistribution& dist, GainNibble g) {
    return pair_probability(dist, g.local_pair(0)) * pair_probability(dist, g.local_pair(1));
}

void require_budget(const EncoderTable& enc) {
    if (enc.block_length() > 4 || enc.message_bits(0) + enc.message_bits(1) > 4) {
        throw BudgetExceeded("exhaustive enumeration limited to n <= 4 and m1 + m2 <= 4");
    }
}

// Receive sequences of both receivers for one (w1, w2, channel sequence).
struct SequencePair {
    std::uint32_t y1 = 0;
    std::uint32_t y2 = 0;
};

SequencePair run_block(const EncoderTable& enc, const std::vector<GainNibble>& states,
                       std::uint32_t w1, std::uint32_t w2) {
    SequencePair out;
    for (int t = 0; t < enc.block_length(); ++t) {
        const bool x1 = enc.emit(0, t, w1, enc.history_index(0, states, t));
        const bool x2 = enc.emit(1, t, w2, enc.history_index(1, states, t));
        const GainNibble g = states[t];
        const bool y1 = (g.g11() && x1) ^ (g.g21() && x2);
        const bool y2 = (g.g12() && x1) ^ (g.g22() && x2);
        out.y1 = (out.y1 << 1) | y1;
        out.y2 = (out.y2 << 1) | y2;
    }
    return out;
}

double histogram_entropy(const std::vector<int>& counts, int total) {
    double h = 0.0;
    for (int c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

template <typename PerStateFn>
void for_each_channel_sequence(const EncoderTable& enc, const LinkPairDistribution& dist,
                               PerStateFn&& fn) {
    const int n = enc.block_length();
    const std::uint64_t total = std::uint64_t{1} << (4 * n);
    std::vector<GainNibble> states(n);
    for (std::uint64_t seq = 0; seq < total; ++seq) {
        double prob = 1.0;
        for (int t = 0; t < n; ++t) {
            states[t].bits = static_cast<std::uint8_t>((seq >> (4 * t)) & 0xF);
            prob *= nibble_probability(dist, states[t]);
        }
        if (prob == 0.0) continue;
        fn(states, prob);
    }
}

}  // namespace

EntropyReport enumerate_entropy(const EncoderTable& enc, const LinkPairDistribution& dist) {
    require_budget(enc);
    const int n = enc.block_length();
    const int m1 = enc.message_bits(0);
    const int m2 = enc.message_bits(1);
    const int w1_count = 1 << m1;
    const int w2_count = 1 << m2;
    const int buckets = 1 << n;

    EntropyReport report;
    for_each_channel_sequence(enc, dist, [&](const std::vector<GainNibble>& states, double pg) {
        for (int w2 = 0; w2 < w2_count; ++w2) {
            std::vector<int> hist1(buckets, 0), hist2(buckets, 0);
            for (int w1 = 0; w1 < w1_count; ++w1) {
                const SequencePair y = run_block(enc, states, w1, w2);
                ++hist1[y.y1];
                ++hist2[y.y2];
            }
            const double weight = pg / w2_count;
            report.h_y1_given_w2_g += weight * histogram_entropy(hist1, w1_count);
            report.h_y2_given_w2_g += weight * histogram_entropy(hist2, w1_count);
        }
    });

    report.weight = rate_weight(dist.link_on_prob, dist.correlation);
    report.margin = report.h_y2_given_w2_g - report.h_y1_given_w2_g / report.weight;
    return report;
}

double check_lemma(const EncoderTable& enc, const LinkPairDistribution& dist) {
    return enumerate_entropy(enc, dist).margin;
}

double receiver_sequence_entropy(const EncoderTable& enc, const LinkPairDistribution& dist,
                                 int receiver, bool condition_on_w2) {
    require_budget(enc);
    const int w1_count = 1 << enc.message_bits(0);
    const int w2_count = 1 << enc.message_bits(1);
    const int buckets = 1 << enc.block_length();

    double h = 0.0;
    for_each_channel_sequence(enc, dist, [&](const std::vector<GainNibble>& states, double pg) {
        if (condition_on_w2) {
            for (int w2 = 0; w2 < w2_count; ++w2) {
                std::vector<int> hist(buckets, 0);
                for (int w1 = 0; w1 < w1_count; ++w1) {
                    const SequencePair y = run_block(enc, states, w1, w2);
                    ++hist[receiver == 0 ? y.y1 : y.y2];
                }
                h += pg / w2_count * histogram_entropy(hist, w1_count);
            }
        } else {
            std::vector<int> hist(buckets, 0);
            for (int w2 = 0; w2 < w2_count; ++w2) {
                for (int w1 = 0; w1 < w1_count; ++w1) {
                    const SequencePair y = run_block(enc, states, w1, w2);
                    ++hist[receiver == 0 ? y.y1 : y.y2];
                }
            }
            h += pg * histogram_entropy(hist, w1_count * w2_count);
        }
    });
    return h;
}

double check_identity(double p, double rho) {
    const LinkPairDistribution d = LinkPairDistribution::solve(p, rho);
    return std::abs(p * rate_weight_polynomial(p, rho) - (1.0 - d.both_off));
}

OuterBoundVerdict outer_bound_check(const RatePoint& point, double p, double rho, double tol) {
    const CapacityRegion region(p, rho);
    OuterBoundVerdict v;
    v.slacks = region.slacks(point);
    v.inside = region.contains(point, tol);
    return v;
}

LemmaScanResult scan_all_single_slot(double p, double rho, int m1, int m2) {
    const LinkPairDistribution dist = LinkPairDistribution::solve(p, rho);
    LemmaScanResult result;
    result.min_margin = std::numeric_limits<double>::infinity();

    const std::uint32_t domain1 = 1u << m1;
    const std::uint32_t domain2 = 1u << m2;
    const std::uint64_t fn1_count = std::uint64_t{1} << domain1;
    const std::uint64_t fn2_count = std::uint64_t{1} << domain2;

    for (std::uint64_t f1 = 0; f1 < fn1_count; ++f1) {
        for (std::uint64_t f2 = 0; f2 < fn2_count; ++f2) {
            EncoderTable enc(1, m1, m2, false);
            for (std::uint32_t w = 0; w < domain1; ++w) enc.set_entry(0, 0, w, 0, (f1 >> w) & 1);
            for (std::uint32_t w = 0; w < domain2; ++w) enc.set_entry(1, 0, w, 0, (f2 >> w) & 1);
            const double margin = check_lemma(enc, dist);
            ++result.encoders_checked;
            if (margin < result.min_margin) {
                result.min_margin = margin;
                result.argmin = enc;
            }
        }
    }
    return result;
}

LemmaScanResult scan_random_two_slot(double p, double rho, std::size_t samples,
                                     std::uint64_t seed, bool full_csit) {
    const LinkPairDistribution dist = LinkPairDistribution::solve(p, rho);
    RngStream rng(seed, StreamRole::encoder_sample,
                  {static_cast<std::uint64_t>(full_csit ? 1 : 0)});
    LemmaScanResult result;
    result.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        EncoderTable enc = EncoderTable::random(2, 1, 1, full_csit, rng);
        const double margin = check_lemma(enc, dist);
        ++result.encoders_checked;
        if (margin < result.min_margin) {
            result.min_margin = margin;
            result.argmin = enc;
        }
    }
    return result;
}

}  // namespace ecic

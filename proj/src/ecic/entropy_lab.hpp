#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ecic/encoder_table.hpp"
#include "ecic/probability.hpp"
#include "ecic/region.hpp"

namespace ecic {

// Exact conditional entropies of the two receive sequences given the second
// user's message and the full channel state sequence, in bits.
struct EntropyReport {
    double h_y2_given_w2_g = 0.0;
    double h_y1_given_w2_g = 0.0;
    double weight = 0.0;  // rate weight of (p, rho)
    double margin = 0.0;  // h_y2 - h_y1 / weight; the inequality claims >= 0
};

// Exhaustive enumeration over all (messages, channel sequences) with the
// product channel law: slots i.i.d., the two transmitters' pairs independent,
// each pair drawn from dist. Budget: n <= 4 and m1 + m2 <= 4, else
// BudgetExceeded. Zero-probability channel sequences are skipped.
EntropyReport enumerate_entropy(const EncoderTable& enc, const LinkPairDistribution& dist);

// Margin of the extremal entropy inequality for one encoder pair; requires
// p != 0.
double check_lemma(const EncoderTable& enc, const LinkPairDistribution& dist);

// H(Y_receiver^n | G^n [, W2]) — the generic entry point; the report above is
// the condition_on_w2 = true pair.
double receiver_sequence_entropy(const EncoderTable& enc, const LinkPairDistribution& dist,
                                 int receiver, bool condition_on_w2);

// |p * weight - (1 - both_off)|: the per-letter coefficient of the converse
// chain equals the probability that at least one outgoing link is on.
double check_identity(double p, double rho);

struct OuterBoundVerdict {
    bool inside = false;
    std::array<double, 4> slacks{};  // same order as CapacityRegion constraints
};

// Evaluates the four capacity constraints at a rate point.
OuterBoundVerdict outer_bound_check(const RatePoint& point, double p, double rho,
                                    double tol = kAnalyticTol);

// Counterexample search over encoder classes. margin_floor is the smallest
// margin seen; any admissible encoder with a negative margin would be a
// reportable counterexample to the inequality.
struct LemmaScanResult {
    double min_margin = 0.0;
    std::size_t encoders_checked = 0;
    std::optional<EncoderTable> argmin;
};

// All deterministic single-slot encoders f_i : {0,1}^{m_i} -> {0,1}.
LemmaScanResult scan_all_single_slot(double p, double rho, int m1, int m2);

// Seeded random two-slot tables (one message bit each); full_csit toggles the
// wider encoder class the converse permits.
LemmaScanResult scan_random_two_slot(double p, double rho, std::size_t samples,
                                     std::uint64_t seed, bool full_csit);

}  // namespace ecic

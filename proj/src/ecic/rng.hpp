#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ecic {

// Deterministic seed derivation. Every consumer of randomness owns a stream
// derived from (master seed, role tag, indices...), so trials are replayable
// bit-for-bit and independent of scheduling order, and the "shared with
// receivers" streams (coded matrices, combination coefficients) can be
// reconstructed from the same tuple on the receiver side.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = splitmix64(master ^ 0x8f1bbcdcbfa53e0bULL);
    for (std::uint64_t t : tags) s = splitmix64(s ^ t);
    return s;
}

// Stream roles. Values are part of the replay contract: changing them changes
// every derived experiment.
enum class StreamRole : std::uint64_t {
    channel = 1,
    coded_matrix = 2,
    multicast_coefficients = 3,
    phase3_coefficients = 4,
    encoder_sample = 5,
    grid_sample = 6,
    message = 7,
};

class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    RngStream(std::uint64_t master, StreamRole role,
              std::initializer_list<std::uint64_t> indices)
        : engine_(derive_with_role(master, role, indices)) {}

    std::uint64_t next_word() { return engine_(); }

    // One fair bit per call.
    bool next_bit() { return (engine_() >> 63) != 0; }

    // Uniform double in [0, 1) with 53 significant bits; avoids
    // std::uniform_real_distribution whose rounding is implementation-defined.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    static std::uint64_t derive_with_role(std::uint64_t master, StreamRole role,
                                          std::initializer_list<std::uint64_t> indices) {
        std::uint64_t s = derive_seed(master, {static_cast<std::uint64_t>(role)});
        for (std::uint64_t i : indices) s = splitmix64(s ^ i);
        return s;
    }

    std::mt19937_64 engine_;
};

}  // namespace ecic

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecic/rng.hpp"

namespace ecic {

// Channel state of one slot packed into a nibble. Gain g_{ij} is the link
// from transmitter i to receiver j.
struct GainNibble {
    std::uint8_t bits = 0;  // bit0 g11, bit1 g12, bit2 g21, bit3 g22

    bool g11() const { return bits & 1; }
    bool g12() const { return (bits >> 1) & 1; }
    bool g21() const { return (bits >> 2) & 1; }
    bool g22() const { return (bits >> 3) & 1; }

    // (direct << 1) | cross for the given transmitter (0-based).
    std::uint8_t local_pair(int tx) const {
        if (tx == 0) return static_cast<std::uint8_t>((g11() << 1) | g12());
        return static_cast<std::uint8_t>((g22() << 1) | g21());
    }
};

// Deterministic encoding tables for both transmitters over a short block:
// the transmitted bit at slot t is a function of the own message and the
// delayed CSI history through slot t-1. The default history is the
// transmitter's own gain pair (local delayed CSI); full_csit widens it to the
// whole 4-gain state, the class the converse argument quantifies over.
class EncoderTable {
  public:
    EncoderTable(int n, int m1, int m2, bool full_csit);

    int block_length() const { return n_; }
    int message_bits(int tx) const { return tx == 0 ? m1_ : m2_; }
    bool uses_full_csit() const { return full_csit_; }

    int history_bits_per_slot() const { return full_csit_ ? 4 : 2; }
    std::size_t history_count(int t) const {
        return std::size_t{1} << (history_bits_per_slot() * t);
    }

    bool emit(int tx, int t, std::uint32_t message, std::size_t history) const {
        return tables_[tx][t][(static_cast<std::size_t>(message) <<
                              (history_bits_per_slot() * t)) |
                             history] != 0;
    }

    void set_entry(int tx, int t, std::uint32_t message, std::size_t history, bool bit) {
        tables_[tx][t][(static_cast<std::size_t>(message) << (history_bits_per_slot() * t)) |
                       history] = bit ? 1 : 0;
    }

    // History index for slot t given the slot states so far.
    std::size_t history_index(int tx, const std::vector<GainNibble>& states, int t) const;

    // Builders.
    static EncoderTable silent(int n, int m1, int m2);
    // One message bit per user, retransmitted every slot.
    static EncoderTable repeat_bit(int n);
    // Head-of-queue retransmission with one message bit: resend until the
    // delayed local pair shows a departure, then stay silent.
    static EncoderTable phase1_automaton(int n);
    static EncoderTable random(int n, int m1, int m2, bool full_csit, RngStream& rng);

    // Compact hex dump of all table entries, for counterexample reports.
    std::string to_compact_string() const;

  private:
    int n_, m1_, m2_;
    bool full_csit_;
    // tables_[tx][t] indexed by (message << history_bits*t) | history.
    std::vector<std::vector<std::uint8_t>> tables_[2];
};

}  // namespace ecic

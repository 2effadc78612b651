#include "ecic/encoder_table.hpp"

#include <stdexcept>

namespace ecic {

EncoderTable::EncoderTable(int n, int m1, int m2, bool full_csit)
    : n_(n), m1_(m1), m2_(m2), full_csit_(full_csit) {
    if (n < 1 || m1 < 1 || m2 < 1) {
        throw std::invalid_argument("encoder table needs n >= 1 and one bit per message");
    }
    for (int tx = 0; tx < 2; ++tx) {
        tables_[tx].resize(n);
        const int m = tx == 0 ? m1 : m2;
        for (int t = 0; t < n; ++t) {
            tables_[tx][t].assign((std::size_t{1} << m) * history_count(t), 0);
        }
    }
}

std::size_t EncoderTable::history_index(int tx, const std::vector<GainNibble>& states,
                                        int t) const {
    std::size_t h = 0;
    for (int s = 0; s < t; ++s) {
        if (full_csit_) {
            h = (h << 4) | states[s].bits;
        } else {
            h = (h << 2) | states[s].local_pair(tx);
        }
    }
    return h;
}

EncoderTable EncoderTable::silent(int n, int m1, int m2) {
    return EncoderTable(n, m1, m2, false);
}

EncoderTable EncoderTable::repeat_bit(int n) {
    EncoderTable e(n, 1, 1, false);
    for (int tx = 0; tx < 2; ++tx) {
        for (int t = 0; t < n; ++t) {
            for (std::size_t h = 0; h < e.history_count(t); ++h) {
                e.set_entry(tx, t, 1, h, true);
            }
        }
    }
    return e;
}

EncoderTable EncoderTable::phase1_automaton(int n) {
    EncoderTable e(n, 1, 1, false);
    for (int tx = 0; tx < 2; ++tx) {
        for (int t = 0; t < n; ++t) {
            for (std::size_t h = 0; h < e.history_count(t); ++h) {
                // Still pending iff every past local pair was (off, off).
                bool pending = true;
                for (int s = 0; s < t; ++s) {
                    const auto pair = (h >> (2 * (t - 1 - s))) & 3;
                    pending = pending && pair == 0;
                }
                e.set_entry(tx, t, 1, h, pending);
            }
        }
    }
    return e;
}

EncoderTable EncoderTable::random(int n, int m1, int m2, bool full_csit, RngStream& rng) {
    EncoderTable e(n, m1, m2, full_csit);
    for (int tx = 0; tx < 2; ++tx) {
        const int m = tx == 0 ? m1 : m2;
        for (int t = 0; t < n; ++t) {
            for (std::uint32_t w = 0; w < (1u << m); ++w) {
                for (std::size_t h = 0; h < e.history_count(t); ++h) {
                    e.set_entry(tx, t, w, h, rng.next_bit());
                }
            }
        }
    }
    return e;
}

std::string EncoderTable::to_compact_string() const {
    static const char* hex = "0123456789abcdef";
    std::string out = "n=" + std::to_string(n_) + ",m1=" + std::to_string(m1_) +
                      ",m2=" + std::to_string(m2_) +
                      ",csit=" + (full_csit_ ? "full" : "local") + ",bits=";
    int nibble = 0, filled = 0;
    for (int tx = 0; tx < 2; ++tx) {
        for (int t = 0; t < n_; ++t) {
            for (std::uint8_t v : tables_[tx][t]) {
                nibble = (nibble << 1) | (v & 1);
                if (++filled == 4) {
                    out += hex[nibble];
                    nibble = filled = 0;
                }
            }
        }
    }
    if (filled) out += hex[nibble << (4 - filled)];
    return out;
}

}  // namespace ecic

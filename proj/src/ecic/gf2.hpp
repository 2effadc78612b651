#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ecic/rng.hpp"

namespace ecic {

// Word-packed bit vector. All protocol algebra is XOR on these.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = 1ULL << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

    void xor_with(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int popcount() const {
        int n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    // Parity of the AND with another vector of the same width: <this, other>
    // over GF(2).
    bool dot(const BitVec& other) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }

    // Index of the lowest set bit, or size() if none.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
        }
        return size_;
    }

    void fill_random(RngStream& rng) {
        for (auto& w : words_) w = rng.next_word();
        mask_tail();
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn((w << 6) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const BitVec& other) const = default;

  private:
    void mask_tail() {
        const std::size_t rem = size_ & 63;
        if (rem && !words_.empty()) words_.back() &= (~0ULL) >> (64 - rem);
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Fixed-shape matrix over GF(2), one BitVec per row.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    const BitVec& row(std::size_t r) const { return data_[r]; }
    BitVec& row(std::size_t r) { return data_[r]; }

    static BitMatrix identity(std::size_t n);

    // Entries i.i.d. fair bits from the stream; reproducible given the stream
    // state (row-major fill order is part of the contract).
    static BitMatrix random(std::size_t rows, std::size_t cols, RngStream& rng);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

// XOR-accumulated product; v must have length cols.
BitVec mat_vec(const BitMatrix& m, const BitVec& v);

// Row rank by in-place elimination on a copy.
std::size_t rank(const BitMatrix& m);

// Online row-reduced basis over a fixed column count; used for rank tracking
// and for solving once the span is full.
class IncrementalBasis {
  public:
    explicit IncrementalBasis(std::size_t cols) : cols_(cols) {}

    // Reduces the row against the basis; keeps it if independent. Returns
    // true when the rank grew. rhs travels with the row.
    bool insert(BitVec row, bool rhs);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool full_rank() const { return rows_.size() == cols_; }

    // Variable values; valid only at full rank (rows are unit vectors then).
    std::vector<std::uint8_t> solution() const;

  private:
    struct Row {
        BitVec coeffs;
        bool rhs;
        std::size_t pivot;
    };
    std::size_t cols_;
    std::vector<Row> rows_;  // sorted by pivot, fully reduced against each other
};

}  // namespace ecic

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ecic {

// Union-find over binary variables with XOR offsets: members of a component
// equal their root XOR a stored parity, and a component may carry a resolved
// value. merge/assign return false on a contradiction (0 = 1 derived).
class ParityUnionFind {
  public:
    explicit ParityUnionFind(std::size_t n)
        : parent_(n), parity_(n, 0), size_(n, 1), value_(n, -1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::int64_t>(i);
    }

    // (root, parity of x relative to root), with path compression.
    std::pair<std::int64_t, bool> find(std::int64_t x) {
        if (parent_[x] == x) return {x, false};
        auto [root, par] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= par ? 1 : 0;
        return {root, parity_[x] != 0};
    }

    bool merge(std::int64_t a, std::int64_t b, bool xor_value) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        const bool rel = pa ^ pb ^ xor_value;  // root_a = root_b XOR rel
        if (ra == rb) return rel == false;
        if (size_[ra] < size_[rb]) {
            std::swap(ra, rb);
        }
        // attach rb under ra: member parities through rb gain `rel`
        parent_[rb] = ra;
        parity_[rb] = rel ? 1 : 0;
        size_[ra] += size_[rb];
        if (value_[rb] >= 0) {
            const bool rb_value = value_[rb] != 0;
            const bool implied = rb_value ^ rel;
            if (value_[ra] >= 0) return (value_[ra] != 0) == implied;
            value_[ra] = implied ? 1 : 0;
        }
        return true;
    }

    bool assign(std::int64_t x, bool v) {
        auto [root, par] = find(x);
        const bool root_value = v ^ par;
        if (value_[root] >= 0) return (value_[root] != 0) == root_value;
        value_[root] = root_value ? 1 : 0;
        return true;
    }

    bool has_value(std::int64_t x) {
        auto [root, par] = find(x);
        (void)par;
        return value_[root] >= 0;
    }

    bool value(std::int64_t x) {
        auto [root, par] = find(x);
        return (value_[root] != 0) ^ par;
    }

  private:
    std::vector<std::int64_t> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::int64_t> size_;
    std::vector<std::int8_t> value_;  // per root: -1 unknown
};

}  // namespace ecic

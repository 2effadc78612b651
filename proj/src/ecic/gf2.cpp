#include "ecic/gf2.hpp"

#include <algorithm>

#include "ecic/errors.hpp"

namespace ecic {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, RngStream& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) m.row(r).fill_random(rng);
    return m;
}

BitVec mat_vec(const BitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols()) {
        throw DimensionMismatch("mat_vec: vector length " + std::to_string(v.size()) +
                                " != matrix cols " + std::to_string(m.cols()));
    }
    BitVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, m.row(r).dot(v));
    return out;
}

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r].get(col)) rows[r].xor_with(rows[rank]);
        }
        ++rank;
    }
    return rank;
}

bool IncrementalBasis::insert(BitVec row, bool rhs) {
    // Full reduction: basis rows ascend by pivot and only carry bits at or
    // above their pivot, so one ascending pass clears every pivot column.
    for (const auto& basis_row : rows_) {
        if (row.get(basis_row.pivot)) {
            row.xor_with(basis_row.coeffs);
            rhs ^= basis_row.rhs;
        }
    }
    const std::size_t lead = row.lowest_set();
    if (lead == cols_) return false;  // dependent (or inconsistent; callers of
                                      // solution() operate on consistent data)

    // Clear this pivot from existing rows so the basis stays fully reduced.
    for (auto& basis_row : rows_) {
        if (basis_row.coeffs.get(lead)) {
            basis_row.coeffs.xor_with(row);
            basis_row.rhs ^= rhs;
        }
    }
    Row entry{std::move(row), rhs, lead};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(entry));
    return true;
}

std::vector<std::uint8_t> IncrementalBasis::solution() const {
    std::vector<std::uint8_t> values(cols_, 0);
    for (const auto& r : rows_) values[r.pivot] = r.rhs ? 1 : 0;
    return values;
}

}  // namespace ecic

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "ecic/errors.hpp"
#include "ecic/gf2.hpp"
#include "ecic/linear_system.hpp"

using namespace ecic;

namespace {

// Naive double-loop product, the oracle mat_vec is checked against.
BitVec naive_mat_vec(const BitMatrix& m, const BitVec& v) {
    BitVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < m.cols(); ++c) acc ^= m.get(r, c) && v.get(c);
        out.set(r, acc);
    }
    return out;
}

// Exhaustive-assignment oracle for solve_determined: a variable is determined
// iff every satisfying assignment agrees on it.
struct EnumerationOutcome {
    bool consistent;
    std::vector<int> values;  // -1 undetermined, else 0/1
};

EnumerationOutcome enumerate_solutions(const EquationSystem& sys) {
    const std::size_t n = sys.unknowns();
    EnumerationOutcome out{false, std::vector<int>(n, -2)};
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << n); ++assign) {
        bool ok = true;
        for (std::size_t e = 0; e < sys.equation_count() && ok; ++e) {
            bool acc = false;
            for (std::size_t c = 0; c < n; ++c) {
                acc ^= sys.coeffs(e).get(c) && ((assign >> c) & 1);
            }
            ok = acc == sys.rhs(e);
        }
        if (!ok) continue;
        out.consistent = true;
        for (std::size_t c = 0; c < n; ++c) {
            const int bit = static_cast<int>((assign >> c) & 1);
            if (out.values[c] == -2)
                out.values[c] = bit;
            else if (out.values[c] != bit)
                out.values[c] = -1;
        }
    }
    return out;
}

BitVec random_vec(std::size_t n, RngStream& rng) {
    BitVec v(n);
    v.fill_random(rng);
    return v;
}

}  // namespace

TEST_CASE("mat_vec basics") {
    const BitMatrix id = BitMatrix::identity(6);
    RngStream rng(11);
    const BitVec v = random_vec(6, rng);
    CHECK(mat_vec(id, v) == v);

    const BitMatrix zero(4, 6);
    CHECK(!mat_vec(zero, v).any());

    CHECK_THROWS_AS(mat_vec(zero, random_vec(5, rng)), DimensionMismatch);
}

TEST_CASE("mat_vec matches the naive product on all 3-bit inputs") {
    RngStream rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const BitMatrix m = BitMatrix::random(3, 3, rng);
        for (int x = 0; x < 8; ++x) {
            BitVec v(3);
            for (int b = 0; b < 3; ++b) v.set(b, (x >> b) & 1);
            CHECK(mat_vec(m, v) == naive_mat_vec(m, v));
        }
    }
}

TEST_CASE("mat_vec is linear") {
    RngStream rng(31);
    const BitMatrix m = BitMatrix::random(40, 64, rng);
    for (int i = 0; i < 50; ++i) {
        const BitVec u = random_vec(64, rng);
        const BitVec v = random_vec(64, rng);
        BitVec sum = u;
        sum.xor_with(v);
        BitVec expect = mat_vec(m, u);
        expect.xor_with(mat_vec(m, v));
        CHECK(mat_vec(m, sum) == expect);
    }
}

TEST_CASE("random matrices are reproducible and shaped") {
    RngStream a(99), b(99);
    const BitMatrix ma = BitMatrix::random(17, 33, a);
    const BitMatrix mb = BitMatrix::random(17, 33, b);
    for (std::size_t r = 0; r < 17; ++r) CHECK(ma.row(r) == mb.row(r));

    RngStream c(1);
    const BitMatrix empty = BitMatrix::random(0, 5, c);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 5);
}

TEST_CASE("tall random matrices have full column rank nearly always") {
    int full = 0;
    const int seeds = 1000;
    for (int s = 0; s < seeds; ++s) {
        RngStream rng(static_cast<std::uint64_t>(s) + 1000);
        if (rank(BitMatrix::random(200, 100, rng)) == 100) ++full;
    }
    CHECK(full >= 990);
}

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(12)) == 12);
    CHECK(rank(BitMatrix(9, 7)) == 0);
}

TEST_CASE("rank of random square matrices matches the nonsingularity product") {
    // prod_{k=1..8} (1 - 2^-k) = 0.289924...
    int nonsingular = 0;
    const int seeds = 100000;
    for (int s = 0; s < seeds; ++s) {
        RngStream rng(static_cast<std::uint64_t>(s));
        if (rank(BitMatrix::random(8, 8, rng)) == 8) ++nonsingular;
    }
    const double fraction = static_cast<double>(nonsingular) / seeds;
    CHECK(fraction == doctest::Approx(0.2888).epsilon(0.02));
    CHECK(std::abs(fraction - 0.289924) < 0.005);
}

TEST_CASE("rank is invariant under row shuffles and row additions") {
    std::mt19937_64 gen(5);
    RngStream rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        BitMatrix m = BitMatrix::random(12, 20, rng);
        const std::size_t base = rank(m);
        for (int op = 0; op < 25; ++op) {
            const std::size_t i = gen() % 12, j = gen() % 12;
            if (gen() & 1) {
                std::swap(m.row(i), m.row(j));
            } else if (i != j) {
                m.row(i).xor_with(m.row(j));
            }
        }
        CHECK(rank(m) == base);
    }
}

TEST_CASE("solve_determined on pinned systems") {
    EquationSystem partial(2);
    BitVec e0(2);
    e0.set(0, true);
    partial.add(e0, true);  // x0 = 1
    const auto out = solve_determined(partial);
    CHECK(out.consistent);
    CHECK(out.values[0] == VarState::one);
    CHECK(out.values[1] == VarState::undetermined);

    EquationSystem chain(2);
    BitVec both(2);
    both.set(0, true);
    both.set(1, true);
    chain.add(both, true);  // x0 ^ x1 = 1
    BitVec e1(2);
    e1.set(1, true);
    chain.add(e1, false);  // x1 = 0
    const auto solved = solve_determined(chain);
    CHECK(solved.consistent);
    CHECK(solved.values[0] == VarState::one);
    CHECK(solved.values[1] == VarState::zero);

    EquationSystem bad(1);
    BitVec x(1);
    x.set(0, true);
    bad.add(x, true);
    bad.add(x, false);
    CHECK(!solve_determined(bad).consistent);
}

TEST_CASE("solve_determined agrees with exhaustive enumeration") {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 3 + gen() % 10;  // up to 12 unknowns here
        const std::size_t eqs = 1 + gen() % (2 * n);
        EquationSystem sys(n);
        RngStream rng(gen());
        for (std::size_t e = 0; e < eqs; ++e) {
            BitVec row(n);
            row.fill_random(rng);
            sys.add(row, rng.next_bit());
        }
        const auto fast = solve_determined(sys);
        const auto slow = enumerate_solutions(sys);
        REQUIRE(fast.consistent == slow.consistent);
        if (!fast.consistent) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (slow.values[c] == -1) {
                CHECK(fast.values[c] == VarState::undetermined);
            } else {
                CHECK(fast.determined(c));
                CHECK(static_cast<int>(fast.value(c)) == slow.values[c]);
            }
        }
    }
}

TEST_CASE("solve_determined matches enumeration on a 20-unknown consistent system") {
    RngStream rng(2718);
    const std::size_t n = 20;
    const BitVec solution = random_vec(n, rng);
    EquationSystem sys(n);
    for (int e = 0; e < 26; ++e) {
        BitVec row(n);
        row.fill_random(rng);
        sys.add(row, row.dot(solution));
    }
    const auto fast = solve_determined(sys);
    const auto slow = enumerate_solutions(sys);
    REQUIRE(fast.consistent);
    REQUIRE(slow.consistent);
    for (std::size_t c = 0; c < n; ++c) {
        if (slow.values[c] == -1) {
            CHECK(fast.values[c] == VarState::undetermined);
        } else {
            CHECK(fast.determined(c));
            CHECK(static_cast<int>(fast.value(c)) == slow.values[c]);
        }
    }
}

TEST_CASE("determined set is stable under row order") {
    std::mt19937_64 gen(99);
    RngStream rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 8;
        std::vector<std::pair<BitVec, bool>> rows;
        BitVec solution = random_vec(n, rng);
        for (int e = 0; e < 10; ++e) {
            BitVec row(n);
            row.fill_random(rng);
            rows.emplace_back(row, row.dot(solution));  // consistent by construction
        }
        EquationSystem a(n), b(n);
        for (const auto& [row, rhs] : rows) a.add(row, rhs);
        std::shuffle(rows.begin(), rows.end(), gen);
        for (const auto& [row, rhs] : rows) b.add(row, rhs);
        const auto oa = solve_determined(a), ob = solve_determined(b);
        REQUIRE(oa.consistent);
        REQUIRE(ob.consistent);
        for (std::size_t c = 0; c < n; ++c) CHECK(oa.values[c] == ob.values[c]);
    }
}

TEST_CASE("incremental basis tracks rank and solves at full rank") {
    RngStream rng(55);
    const std::size_t n = 24;
    const BitVec secret = random_vec(n, rng);
    IncrementalBasis basis(n);
    std::size_t inserts = 0;
    while (!basis.full_rank() && inserts < 200) {
        BitVec row(n);
        row.fill_random(rng);
        basis.insert(row, row.dot(secret));
        ++inserts;
    }
    REQUIRE(basis.full_rank());
    CHECK(inserts < n + 30);
    const auto values = basis.solution();
    for (std::size_t c = 0; c < n; ++c) CHECK(values[c] == (secret.get(c) ? 1 : 0));

    // dependent rows do not grow the rank
    BitVec zero(n);
    CHECK(!IncrementalBasis(0).insert(BitVec(0), false));
    IncrementalBasis small(4);
    BitVec r1(4);
    r1.set(0, true);
    CHECK(small.insert(r1, true));
    CHECK(!small.insert(r1, true));
    CHECK(small.rank() == 1);
}

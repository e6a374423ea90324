#include <doctest.h>

#include "kgc/errors.hpp"
#include "kgc/linalg.hpp"
#include "kgc/rng.hpp"

using namespace kgc;

namespace {

Integer naive_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0, mc = 0; cc < n; ++cc)
                if (cc != c)
                    minor(r - 1, mc++) = m(r, cc);
        Integer term = m(0, c) * naive_det(minor);
        acc += (c % 2 == 0) ? term : Integer(-term);
    }
    return acc;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.range(-9, 9);
    return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j)
            continue;
        u.add_row_multiple(i, j, rng.range(-3, 3));
    }
    return u;
}

} // namespace

TEST_CASE("determinant: pinned values") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{2, 0}, {0, 3}}) == 6);
    // Incidence matrix of the triangle: the g=3 pairing matrix.
    CHECK(det(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == -2);
    CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), dimension_error);
}

TEST_CASE("determinant: agrees with cofactor expansion on random matrices") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, n, n);
        CAPTURE(trial);
        REQUIRE(det(m) == naive_det(m));
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(IntMatrix::identity(3)) == 3);
    CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(rank(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
}

TEST_CASE("hnf: pinned values") {
    LatticeBasis h = hnf(IntMatrix{{2, 4}, {2, 2}});
    CHECK(h.rows() == IntMatrix{{2, 0}, {0, 2}});

    LatticeBasis h2 = hnf(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(h2.rank() == 2);
    CHECK(h2.rows() == IntMatrix{{1, 2, 3}, {0, 3, 6}});

    // Negative pivots are normalized and zero rows trimmed.
    LatticeBasis h3 = hnf(IntMatrix{{-3, 0}, {0, 0}});
    CHECK(h3.rows() == IntMatrix{{3, 0}});

    CHECK(hnf(IntMatrix(2, 4)).rank() == 0);
}

TEST_CASE("hnf: canonical under unimodular row changes, idempotent") {
    Rng rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, rows, cols);
        LatticeBasis h = hnf(m);
        CAPTURE(trial);
        REQUIRE(h.rank() == rank(m));
        // Same lattice, different generating set.
        IntMatrix u = random_unimodular(rng, rows);
        REQUIRE(hnf(u * m).rows() == h.rows());
        // Idempotent on its own output.
        REQUIRE(hnf(h.rows()).rows() == h.rows());
    }
}

TEST_CASE("snf: pinned values") {
    SnfResult nf = snf(IntMatrix{{4, 0}, {0, 6}});
    CHECK(nf.divisors == std::vector<Integer>{2, 12});
    CHECK(nf.rank == 2);
    CHECK(nf.s * IntMatrix{{4, 0}, {0, 6}} * nf.t == nf.d);

    SnfResult zero = snf(IntMatrix(2, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.divisors.empty());

    SnfResult j = snf(IntMatrix{{0, 1}, {-1, 0}});
    CHECK(j.divisors == std::vector<Integer>{1, 1});
}

TEST_CASE("snf: transforms are unimodular inverses and divisors chain") {
    Rng rng(303);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, rows, cols);
        SnfResult nf = snf(m);
        CAPTURE(trial);
        REQUIRE(nf.s * m * nf.t == nf.d);
        REQUIRE(nf.s * nf.s_inv == IntMatrix::identity(rows));
        REQUIRE(nf.s_inv * nf.s == IntMatrix::identity(rows));
        REQUIRE(nf.t * nf.t_inv == IntMatrix::identity(cols));
        REQUIRE(iabs(det(nf.s)) == 1);
        REQUIRE(iabs(det(nf.t)) == 1);
        for (std::size_t i = 0; i < nf.divisors.size(); ++i) {
            REQUIRE(nf.divisors[i] > 0);
            REQUIRE(nf.d(i, i) == nf.divisors[i]);
            if (i + 1 < nf.divisors.size())
                REQUIRE(nf.divisors[i + 1] % nf.divisors[i] == 0);
        }
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (r != c)
                    REQUIRE(nf.d(r, c) == 0);
        REQUIRE(nf.rank == rank(m));
    }
}

TEST_CASE("kernel_lattice: pinned values") {
    LatticeBasis k = kernel_lattice(IntMatrix{{1, 1}});
    CHECK(k.rows() == IntMatrix{{1, -1}});

    // Nonsingular matrix: trivial kernel.
    CHECK(kernel_lattice(IntMatrix{{0, 1}, {-1, 0}}).rank() == 0);

    // x + 2y + 3z = 0 over the integers.
    LatticeBasis k3 = kernel_lattice(IntMatrix{{1, 2, 3}});
    CHECK(k3.rank() == 2);
    IntMatrix a{{1, 2, 3}};
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(is_zero_vector(a * k3.vector(i)));
}

TEST_CASE("kernel_lattice: saturated and canonical") {
    Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, rows, cols);
        LatticeBasis k = kernel_lattice(m);
        CAPTURE(trial);
        REQUIRE(k.rank() == cols - rank(m));
        for (std::size_t i = 0; i < k.rank(); ++i)
            REQUIRE(is_zero_vector(m * k.vector(i)));
        // Saturation: the basis extends to a basis of the ambient lattice,
        // i.e. all elementary divisors of the stacked basis are 1.
        if (k.rank() > 0) {
            SnfResult nf = snf(k.rows());
            for (const Integer& d : nf.divisors)
                REQUIRE(d == 1);
        }
        // Canonical: row-equivalent inputs have the same kernel basis.
        IntMatrix u = random_unimodular(rng, rows);
        REQUIRE(kernel_lattice(u * m).rows() == k.rows());
    }
}

TEST_CASE("membership and lattice comparisons") {
    LatticeBasis even = hnf(IntMatrix{{2, 0}, {0, 2}});
    CHECK(in_lattice({2, 4}, even));
    CHECK_FALSE(in_lattice({1, 0}, even));
    CHECK(in_lattice({0, 0}, even));

    LatticeBasis full = hnf(IntMatrix::identity(2));
    CHECK(lattice_subset(even, full));
    CHECK_FALSE(lattice_subset(full, even));
    CHECK(lattice_equal(even, hnf(IntMatrix{{2, 0}, {2, 2}})));
    CHECK_FALSE(lattice_equal(even, full));

    // Mixed-dimension queries are refused.
    CHECK_THROWS_AS(in_lattice({1, 2, 3}, even), dimension_error);
}

TEST_CASE("LatticeBasis validates independence") {
    CHECK_THROWS_AS(LatticeBasis(IntMatrix{{1, 2}, {2, 4}}, 2), invalid_input_error);
    LatticeBasis ok(IntMatrix{{1, 2}, {0, 1}}, 2);
    CHECK(ok.rank() == 2);
    CHECK(ok.ambient() == 2);
    CHECK(LatticeBasis::empty(5).rank() == 0);
    CHECK_THROWS_AS(LatticeBasis(IntMatrix{{1, 2, 3}}, 2), dimension_error);
}

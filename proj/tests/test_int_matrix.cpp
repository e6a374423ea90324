#include <doctest.h>

#include "kgc/errors.hpp"
#include "kgc/int_matrix.hpp"

using namespace kgc;

TEST_CASE("construction and element access") {
    IntMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.is_zero());
    m(1, 2) = 7;
    CHECK(m(1, 2) == 7);
    CHECK_FALSE(m.is_zero());

    IntMatrix lit{{1, 2}, {3, 4}};
    CHECK(lit(0, 0) == 1);
    CHECK(lit(1, 1) == 4);
    CHECK_THROWS_AS(lit.at(2, 0), dimension_error);
    CHECK_THROWS_AS(lit.at(0, 2), dimension_error);

    auto ragged = [] { return IntMatrix{{1, 2}, {3}}; };
    CHECK_THROWS_AS(ragged(), dimension_error);
}

TEST_CASE("identity, equality, transpose") {
    IntMatrix i3 = IntMatrix::identity(3);
    CHECK(i3(0, 0) == 1);
    CHECK(i3(0, 1) == 0);
    CHECK(i3 == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(i3 != IntMatrix::identity(2));

    IntMatrix m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.transpose() == IntMatrix{{1, 4}, {2, 5}, {3, 6}});
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("arithmetic") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{0, 1}, {1, 0}};
    CHECK(a + b == IntMatrix{{1, 3}, {4, 4}});
    CHECK(a - b == IntMatrix{{1, 1}, {2, 4}});
    CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
    CHECK(b * a == IntMatrix{{3, 4}, {1, 2}});
    CHECK(-a == IntMatrix{{-1, -2}, {-3, -4}});
    CHECK(Integer(2) * a == IntMatrix{{2, 4}, {6, 8}});

    std::vector<Integer> v{1, 1};
    std::vector<Integer> av = a * v;
    CHECK(av[0] == 3);
    CHECK(av[1] == 7);

    IntMatrix wide(2, 3);
    CHECK_THROWS_AS(a + wide, dimension_error);
    CHECK_THROWS_AS(a * wide * a, dimension_error); // 2x3 times 2x2
    CHECK_THROWS_AS(wide * v, dimension_error);
}

TEST_CASE("row and column operations mirror elementary matrices") {
    IntMatrix m{{1, 2}, {3, 4}};

    IntMatrix s = m;
    s.swap_rows(0, 1);
    CHECK(s == IntMatrix{{3, 4}, {1, 2}});
    s.swap_cols(0, 1);
    CHECK(s == IntMatrix{{4, 3}, {2, 1}});

    IntMatrix n = m;
    n.negate_row(0);
    CHECK(n == IntMatrix{{-1, -2}, {3, 4}});
    n.negate_col(1);
    CHECK(n == IntMatrix{{-1, 2}, {3, -4}});

    IntMatrix r = m;
    r.add_row_multiple(1, 0, 10); // row1 += 10*row0
    CHECK(r == IntMatrix{{1, 2}, {13, 24}});
    r.add_col_multiple(0, 1, -1); // col0 -= col1
    CHECK(r == IntMatrix{{-1, 2}, {-11, 24}});
}

TEST_CASE("rows, columns, blocks, stacking") {
    IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    std::vector<Integer> r1 = m.row(1);
    CHECK(r1 == std::vector<Integer>{4, 5, 6});
    std::vector<Integer> c2 = m.col(2);
    CHECK(c2 == std::vector<Integer>{3, 6, 9});

    m.set_row(0, {9, 9, 9});
    CHECK(m.row(0) == std::vector<Integer>{9, 9, 9});
    m.set_col(0, {1, 1, 1});
    CHECK(m.col(0) == std::vector<Integer>{1, 1, 1});
    CHECK_THROWS_AS(m.set_row(0, {1}), dimension_error);

    CHECK(m.block(1, 3, 1, 3) == IntMatrix{{5, 6}, {8, 9}});
    CHECK(m.block(0, 0, 0, 3).rows() == 0);

    IntMatrix top{{1, 0}}, bottom{{0, 1}, {2, 2}};
    CHECK(vstack(top, bottom) == IntMatrix{{1, 0}, {0, 1}, {2, 2}});
    CHECK_THROWS_AS(vstack(top, IntMatrix(1, 3)), dimension_error);
}

TEST_CASE("zero vector predicate") {
    CHECK(is_zero_vector(std::vector<Integer>{0, 0}));
    CHECK_FALSE(is_zero_vector(std::vector<Integer>{0, 1}));
    CHECK(is_zero_vector(std::vector<Integer>{}));
}

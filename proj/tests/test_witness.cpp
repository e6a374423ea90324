#include <doctest.h>

#include "kgc/errors.hpp"
#include "kgc/witness.hpp"

#include <algorithm>

using namespace kgc;

namespace {

WitnessProblem four_splittings(const SymplecticContext& ctx) {
    Splitting w0 = standard_splitting(ctx);
    WitnessProblem problem;
    problem.g = ctx.genus();
    problem.splittings = {w0, apply(psi_pq(ctx, 1, 2), w0), apply(psi_pq(ctx, 1, 3), w0),
                          apply(psi_pq(ctx, 2, 3), w0)};
    return problem;
}

} // namespace

TEST_CASE("projections: resolution of the identity, orthogonal idempotents") {
    SymplecticContext ctx(3);
    Splitting s = apply(psi_pq(ctx, 1, 2), standard_splitting(ctx));
    std::vector<IntMatrix> proj = projections(ctx, s);
    REQUIRE(proj.size() == 3);

    IntMatrix sum(6, 6);
    for (const IntMatrix& p : proj)
        sum = sum + p;
    CHECK(sum == IntMatrix::identity(6));

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(proj[i] * proj[j] == (i == j ? proj[i] : IntMatrix(6, 6)));

    // Each projection lands in its own summand and restricts to the
    // identity there.
    for (std::size_t i = 0; i < 3; ++i) {
        LatticeBasis summand = hnf(s.summand(i + 1));
        for (std::size_t r = 0; r < 2; ++r) {
            HVector v = summand.vector(r);
            CHECK(proj[i] * v == v);
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i)
                    CHECK(is_zero_vector(proj[j] * v));
        }
    }
}

TEST_CASE("distinguishing index: pinned values") {
    SymplecticContext ctx(3);
    Splitting w0 = standard_splitting(ctx);
    Splitting s12 = apply(psi_pq(ctx, 1, 2), w0);
    Splitting s23 = apply(psi_pq(ctx, 2, 3), w0);

    CHECK(distinguishing_index(ctx, w0, s12) == 1);
    // s23 leaves span{a1, b1} untouched, so position 1 cannot distinguish:
    // the first distinguishing summand of w0 sits at position 2.
    CHECK(distinguishing_index(ctx, w0, s23) == 2);

    try {
        distinguishing_index(ctx, w0, w0);
        FAIL("expected exhaustion");
    } catch (const exhaustion_error& e) {
        CHECK(e.found() == 0);
    }
}

TEST_CASE("generic witness: found, verified, exactly decomposed") {
    SymplecticContext ctx(3);
    WitnessProblem problem = four_splittings(ctx);
    WitnessResult res = find_generic_x(ctx, problem);

    CHECK(verify_generic(ctx, res.x, problem));
    REQUIRE(res.grid.size() == 4);
    REQUIRE(res.index.size() == 4);

    std::vector<IntMatrix> all_proj[4] = {
        projections(ctx, problem.splittings[0]), projections(ctx, problem.splittings[1]),
        projections(ctx, problem.splittings[2]), projections(ctx, problem.splittings[3])};

    for (std::size_t s = 0; s < 4; ++s) {
        REQUIRE(res.grid[s].size() == 3);
        HVector sum(6, 0);
        for (std::size_t i = 0; i < 3; ++i) {
            const WitnessComponent& cell = res.grid[s][i];
            CHECK(cell.component == all_proj[s][i] * res.x);
            CHECK_FALSE(is_zero_vector(cell.component));
            CHECK(cell.multiplier >= 1);
            CHECK(is_primitive(cell.primitive));
            for (std::size_t c = 0; c < 6; ++c) {
                CHECK(cell.multiplier * cell.primitive[c] == cell.component[c]);
                sum[c] += cell.component[c];
            }
        }
        CHECK(sum == res.x);
        for (std::size_t q = s + 1; q < 4; ++q) {
            std::size_t star = res.index[s][q];
            CHECK(star >= 1);
            CHECK(star <= 3);
            CHECK(star == distinguishing_index(ctx, problem.splittings[s],
                                               problem.splittings[q]));
        }
    }

    // Deterministic search: a second run returns the identical witness.
    CHECK(find_generic_x(ctx, problem).x == res.x);
}

TEST_CASE("generic witness: literal separation holds pairwise") {
    SymplecticContext ctx(3);
    WitnessProblem problem = four_splittings(ctx);
    WitnessResult res = find_generic_x(ctx, problem);
    // For every pair, the component multisets differ; spot-check by sorting
    // the component vectors and comparing.
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t q = s + 1; q < 4; ++q) {
            std::vector<std::vector<Integer>> cs, cq;
            for (std::size_t i = 0; i < 3; ++i) {
                cs.push_back(res.grid[s][i].component);
                cq.push_back(res.grid[q][i].component);
            }
            std::sort(cs.begin(), cs.end());
            std::sort(cq.begin(), cq.end());
            CHECK(cs != cq);
        }
}

TEST_CASE("generic witness: degenerate inputs") {
    SymplecticContext ctx(3);
    Splitting w0 = standard_splitting(ctx);

    WitnessProblem dup;
    dup.g = 3;
    dup.splittings = {w0, w0};
    CHECK_THROWS_AS(find_generic_x(ctx, dup), exhaustion_error);

    WitnessProblem single;
    single.g = 3;
    single.splittings = {w0};
    WitnessResult res = find_generic_x(ctx, single);
    CHECK(verify_generic(ctx, res.x, single));

    // x = a1 has zero components in two summands: not generic.
    WitnessProblem pairp;
    pairp.g = 3;
    pairp.splittings = {w0, apply(psi_pq(ctx, 2, 3), w0)};
    CHECK_FALSE(verify_generic(ctx, ctx.a(1), pairp));

    WitnessProblem empty;
    empty.g = 3;
    CHECK_THROWS_AS(find_generic_x(ctx, empty), invalid_input_error);
}

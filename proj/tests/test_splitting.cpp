#include <doctest.h>

#include "kgc/errors.hpp"
#include "kgc/splitting.hpp"

#include <set>

using namespace kgc;

namespace {

// The symplectic involution exchanging handles 1 and 2.
SpElement handle_swap12(const SymplecticContext& ctx) {
    IntMatrix m = IntMatrix::identity(ctx.dim());
    m(0, 0) = 0;
    m(1, 1) = 0;
    m(2, 2) = 0;
    m(3, 3) = 0;
    m(0, 2) = 1;
    m(2, 0) = 1;
    m(1, 3) = 1;
    m(3, 1) = 1;
    return SpElement(ctx, m);
}

} // namespace

TEST_CASE("standard splitting: canonical order and pinned summands") {
    SymplecticContext ctx(3);
    Splitting w0 = standard_splitting(ctx);
    CHECK(w0.genus() == 3);
    CHECK(w0.summands().size() == 3);
    CHECK(w0.summand(1) == IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
    CHECK(w0.summand(2) == IntMatrix{{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
    CHECK(w0.summand(3) == IntMatrix{{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    CHECK_THROWS_AS(w0.summand(0), dimension_error);
    CHECK_THROWS_AS(w0.summand(4), dimension_error);

    // Presenting the same summands with different generators or in a
    // different order yields the identical object.
    IntMatrix s1{{1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}; // a1+b1, b1
    IntMatrix s2{{0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0}}; // b2, a2
    IntMatrix s3{{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
    Splitting same(ctx, {s3, s1, s2});
    CHECK(same == w0);
    CHECK(same.signature_key() == w0.signature_key());
}

TEST_CASE("splitting validation") {
    SymplecticContext ctx(2);
    IntMatrix h1{{1, 0, 0, 0}, {0, 1, 0, 0}};
    IntMatrix h2{{0, 0, 1, 0}, {0, 0, 0, 1}};

    // Not orthogonal: both contain handle-1 directions.
    IntMatrix overlap{{1, 0, 0, 0}, {0, 0, 0, 1}};
    CHECK_THROWS_AS(Splitting(ctx, {h1, overlap}), invalid_input_error);

    // Index-2 sublattice: stacked determinant is 2, not a splitting.
    IntMatrix doubled{{2, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK_THROWS_AS(Splitting(ctx, {doubled, h2}), invalid_input_error);

    // Rank-1 summand.
    IntMatrix thin{{1, 0, 0, 0}, {2, 0, 0, 0}};
    CHECK_THROWS_AS(Splitting(ctx, {thin, h2}), invalid_input_error);

    // Wrong number of summands.
    CHECK_THROWS_AS(Splitting(ctx, {h1}), invalid_input_error);
}

TEST_CASE("group action on splittings") {
    SymplecticContext ctx(3);
    Splitting w0 = standard_splitting(ctx);
    SpElement psi = psi_pq(ctx, 1, 2);
    SpElement t = transvection(ctx, ctx.a(3));

    Splitting moved = apply(psi, w0);
    CHECK(moved != w0);
    CHECK(apply(SpElement::identity(ctx), w0) == w0);
    CHECK(apply(psi * t, w0) == apply(psi, apply(t, w0)));
    CHECK(apply(psi.inverse(), moved) == w0);
}

TEST_CASE("stabilizer membership") {
    SymplecticContext ctx(3);
    CHECK(in_stabilizer(ctx, SpElement::identity(ctx)));
    CHECK(in_stabilizer(ctx, transvection(ctx, ctx.a(1))));
    CHECK(in_stabilizer(ctx, transvection(ctx, ctx.b(2))));
    CHECK(in_stabilizer(ctx, handle_swap12(ctx))); // permuting summands is allowed

    HVector mixed = ctx.a(1);
    mixed[ctx.a_index(2)] = 1; // a1 + a2 crosses two summands
    CHECK_FALSE(in_stabilizer(ctx, transvection(ctx, mixed)));
    CHECK_FALSE(in_stabilizer(ctx, psi_pq(ctx, 1, 2)));
}

TEST_CASE("left cosets") {
    SymplecticContext ctx(3);
    SpElement psi12 = psi_pq(ctx, 1, 2);
    SpElement psi13 = psi_pq(ctx, 1, 3);
    SpElement stab = transvection(ctx, ctx.a(1)) * handle_swap12(ctx);

    CHECK(same_left_coset(ctx, psi12, psi12 * stab));
    CHECK_FALSE(same_left_coset(ctx, psi12, psi13));
    CHECK_FALSE(same_left_coset(ctx, SpElement::identity(ctx), psi12));

    // Left-coset equality is exactly equality of the transported splittings.
    Splitting w0 = standard_splitting(ctx);
    CHECK(apply(psi12, w0) == apply(psi12 * stab, w0));
    CHECK(apply(psi12, w0) != apply(psi13, w0));
}

TEST_CASE("default generators") {
    SymplecticContext ctx(3);
    std::vector<SpElement> gens = default_coset_generators(ctx);
    CHECK(gens.size() == 10); // 4g - 2
    for (const SpElement& x : gens)
        CHECK(is_symplectic(ctx, x.matrix()));
}

TEST_CASE("coset enumeration: distinct representatives in a stable order") {
    SymplecticContext ctx(3);
    std::vector<SpElement> reps = enumerate_coset_reps(ctx, 6);
    REQUIRE(reps.size() == 6);
    CHECK(reps[0] == SpElement::identity(ctx));
    std::set<std::string> keys;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        keys.insert(apply(reps[i], standard_splitting(ctx)).signature_key());
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(same_left_coset(ctx, reps[i], reps[j]));
    }
    CHECK(keys.size() == 6);

    // Deterministic: a second run yields the same representatives.
    std::vector<SpElement> again = enumerate_coset_reps(ctx, 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(reps[i] == again[i]);
}

TEST_CASE("coset enumeration: exhaustion reports progress") {
    SymplecticContext ctx(2);
    // A generator inside the stabilizer can never leave the identity coset.
    std::vector<SpElement> lazy{transvection(ctx, ctx.a(1))};
    try {
        enumerate_coset_reps(ctx, 2, lazy);
        FAIL("expected exhaustion");
    } catch (const exhaustion_error& e) {
        CHECK(e.found() == 1);
    }
}

#include "kgc/selftest.hpp"

#include "kgc/errors.hpp"
#include "kgc/linalg.hpp"
#include "kgc/pairing.hpp"
#include "kgc/rng.hpp"
#include "kgc/seifert.hpp"
#include "kgc/splitting.hpp"
#include "kgc/wedge.hpp"
#include "kgc/witness.hpp"

#include <chrono>
#include <exception>
#include <sstream>
#include <thread>
#include <utility>

namespace kgc {

namespace {

// ---- independent oracles -------------------------------------------------
// These deliberately re-derive results by a different algorithm than the
// library path they check.

// Determinant by first-row cofactor expansion.  Exponential, only ever fed
// matrices up to 5x5.
Integer cofactor_det(const IntMatrix& m) {
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
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc == c)
                    continue;
                minor(r - 1, mc++) = m(r, cc);
            }
        }
        Integer term = m(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : Integer(-term);
    }
    return acc;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.range(lo, hi);
    return m;
}

SpElement random_word(const SymplecticContext& ctx, const std::vector<SpElement>& gens,
                      std::size_t max_len, Rng& rng) {
    SpElement x = SpElement::identity(ctx);
    std::size_t len = 1 + rng.below(max_len);
    for (std::size_t i = 0; i < len; ++i)
        x = gens[rng.below(gens.size())] * x;
    return x;
}

// ---- criteria --------------------------------------------------------------

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& msg) {
        ok = false;
        if (detail.tellp() > 0)
            detail << "; ";
        detail << msg;
    }
};

CriterionResult criterion_pairing_sweep() {
    CriterionResult res;
    Check chk;
    for (std::size_t g = 3; g <= 12; ++g) {
        SymplecticContext ctx(g);
        Prop22Report rep = verify_prop22(ctx);
        if (!rep.pass)
            chk.fail("g=" + std::to_string(g) + ": detC=" + rep.det_c.str() + " pairing=" +
                     rep.pairing.str() + " expected=" + rep.expected.str());
    }
    if (chk.ok)
        chk.detail << "g=3..12: pairing equals (-1)^(g-1) 2^(g-2), det equals -2^(g-2)";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_twist_tables() {
    CriterionResult res;
    Check chk;
    std::size_t tables = 0;
    for (std::size_t g = 3; g <= 12; ++g) {
        SymplecticContext ctx(g);
        for (std::size_t p = 1; p <= g; ++p)
            for (std::size_t q = p + 1; q <= g; ++q) {
                LambdaTable t = lambda_pq_table(ctx, p, q);
                ++tables;
                for (std::size_t i = 1; i <= g; ++i) {
                    Integer want = (i == p || i == q) ? 1 : 0;
                    if (t.delta[i - 1] != want)
                        chk.fail("g=" + std::to_string(g) + " (p,q)=(" + std::to_string(p) + "," +
                                 std::to_string(q) + ") delta_" + std::to_string(i) + "=" +
                                 t.delta[i - 1].str() + " want " + want.str());
                }
                for (std::size_t i = 2; i + 2 <= g; ++i) {
                    Integer want = (p <= i && i < q) ? 1 : 0;
                    if (t.epsilon[i - 2] != want)
                        chk.fail("g=" + std::to_string(g) + " (p,q)=(" + std::to_string(p) + "," +
                                 std::to_string(q) + ") epsilon_" + std::to_string(i) + "=" +
                                 t.epsilon[i - 2].str() + " want " + want.str());
                }
            }
    }
    if (chk.ok)
        chk.detail << tables << " tables over g=3..12, every entry matches";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_fixed_sublattice() {
    CriterionResult res;
    Check chk;
    for (std::size_t g = 3; g <= 5; ++g) {
        USpace us = u_space(g);
        FixedSublatticeReport rep = fixed_sublattice_check(us);
        // Required: lattice equality AND common rank C(g,3) + g(g-1).
        std::size_t required_rank = g * (g - 1) * (g - 2) / 6 + g * (g - 1);
        bool ok = rep.equal && rep.rank == required_rank;
        if (!ok)
            chk.fail("g=" + std::to_string(g) + ": equal=" + (rep.equal ? "true" : "false") +
                     " rank=" + std::to_string(rep.rank) + " (required " +
                     std::to_string(required_rank) + ")");
    }
    if (chk.ok)
        chk.detail << "g=3,4,5: computed fixed lattice equals the generator span at the "
                      "required rank";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_pullback_invariant() {
    CriterionResult res;
    Check chk;
    SymplecticContext ctx(3);
    std::vector<SpElement> gens = default_coset_generators(ctx);
    SeifertForm base = base_seifert(ctx);
    if (base.matrix().transpose() - base.matrix() != ctx.j())
        chk.fail("base form fails the identity");
    Rng rng(0x5e1f7e57c4ULL);
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        SpElement x = random_word(ctx, gens, 20, rng);
        SeifertForm l = pullback(base, x);
        // SeifertForm re-checks on construction; verify explicitly anyway so
        // this criterion does not lean on constructor behavior.
        if (l.matrix().transpose() - l.matrix() != ctx.j()) {
            chk.fail("trial " + std::to_string(trial) + " violates the identity");
            break;
        }
        ++done;
    }
    if (chk.ok)
        chk.detail << "base form and " << done << " pullbacks along words of length <= 20";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_basis_invariance() {
    CriterionResult res;
    Check chk;
    Rng rng(0xba515f0cdeULL);
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 200 && chk.ok; ++trial) {
        std::size_t g = 3 + trial % 3;
        SymplecticContext ctx(g);

        // Random cocycle form and random twist spec.
        std::size_t p = 1 + rng.below(g - 1);
        std::size_t q = p + 1 + rng.below(g - p);
        SeifertForm l = pullback(base_seifert(ctx), psi_pq(ctx, p, q));
        bool use_eps = g >= 4 && trial % 2 == 1;
        SeparatingTwistSpec spec = use_eps
                                       ? epsilon_spec(ctx, 2 + rng.below(g - 3))
                                       : delta_spec(ctx, 1 + rng.below(g));
        Integer before = morita_lambda(l, spec);

        // Rebase the summand by a random symplectic change of its own basis.
        std::size_t gp = spec.sub_genus();
        SymplecticContext sub(gp);
        SpElement w = random_word(sub, default_coset_generators(sub), 8, rng);
        IntMatrix cols = spec.stacked().transpose() * w.matrix();
        std::vector<std::pair<HVector, HVector>> pairs;
        pairs.reserve(gp);
        for (std::size_t s = 0; s < gp; ++s)
            pairs.emplace_back(cols.col(2 * s), cols.col(2 * s + 1));
        SeparatingTwistSpec rebased(ctx, std::move(pairs));

        Integer after = morita_lambda(l, rebased);
        if (after != before)
            chk.fail("trial " + std::to_string(trial) + " (g=" + std::to_string(g) +
                     "): value changed " + before.str() + " -> " + after.str());
        else
            ++done;
    }
    if (chk.ok)
        chk.detail << done << " random rebasings across g=3,4,5 leave the invariant unchanged";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_coset_reps() {
    CriterionResult res;
    Check chk;
    SymplecticContext ctx(3);
    std::vector<SpElement> reps = enumerate_coset_reps(ctx, 25);
    if (reps.size() != 25)
        chk.fail("enumeration returned " + std::to_string(reps.size()) + " representatives");
    // Independent of the signature dedup the enumeration used: decide each
    // pair through in_stabilizer(x^{-1} y).
    for (std::size_t i = 0; i < reps.size() && chk.ok; ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (same_left_coset(ctx, reps[i], reps[j])) {
                chk.fail("representatives " + std::to_string(i) + " and " + std::to_string(j) +
                         " share a coset");
                break;
            }
    if (chk.ok)
        chk.detail << "25 representatives at g=3, all 300 pairs separated via x^-1 y";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_generic_witness() {
    CriterionResult res;
    Check chk;
    SymplecticContext ctx(3);
    Splitting w0 = standard_splitting(ctx);
    WitnessProblem problem;
    problem.g = 3;
    problem.splittings.push_back(w0);
    problem.splittings.push_back(apply(psi_pq(ctx, 1, 2), w0));
    problem.splittings.push_back(apply(psi_pq(ctx, 1, 3), w0));
    problem.splittings.push_back(apply(psi_pq(ctx, 2, 3), w0));

    WitnessResult wit = find_generic_x(ctx, problem);
    if (!verify_generic(ctx, wit.x, problem))
        chk.fail("verify_generic rejected the found witness");
    for (std::size_t s = 0; s < problem.splittings.size(); ++s) {
        HVector sum(ctx.dim());
        for (std::size_t i = 0; i < ctx.genus(); ++i) {
            const WitnessComponent& cell = wit.grid[s][i];
            if (is_zero_vector(cell.component))
                chk.fail("component (" + std::to_string(s) + "," + std::to_string(i) + ") is zero");
            if (!is_primitive(cell.primitive))
                chk.fail("primitive part at (" + std::to_string(s) + "," + std::to_string(i) +
                         ") is not primitive");
            if (cell.multiplier < 1)
                chk.fail("multiplier at (" + std::to_string(s) + "," + std::to_string(i) +
                         ") is not positive");
            for (std::size_t c = 0; c < ctx.dim(); ++c) {
                if (cell.multiplier * cell.primitive[c] != cell.component[c])
                    chk.fail("(n, a) does not reconstruct component (" + std::to_string(s) + "," +
                             std::to_string(i) + ")");
                sum[c] += cell.component[c];
            }
        }
        if (sum != wit.x)
            chk.fail("components of splitting " + std::to_string(s) + " do not sum to x");
    }
    if (chk.ok) {
        chk.detail << "witness x = (";
        for (std::size_t c = 0; c < wit.x.size(); ++c)
            chk.detail << (c ? "," : "") << wit.x[c].str();
        chk.detail << ") verified against all pairs";
    }
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_normal_form_oracles() {
    CriterionResult res;
    Check chk;
    Rng rng(0xdec0de0fACE5ULL);
    for (std::size_t trial = 0; trial < 500 && chk.ok; ++trial) {
        std::size_t n = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, n, n, -9, 9);
        if (det(m) != cofactor_det(m))
            chk.fail("determinant mismatch on trial " + std::to_string(trial));
    }
    for (std::size_t trial = 0; trial < 200 && chk.ok; ++trial) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        IntMatrix m = random_matrix(rng, r, c, -9, 9);
        SnfResult nf = snf(m);
        if (nf.s * m * nf.t != nf.d)
            chk.fail("s a t != d on trial " + std::to_string(trial));
        Integer ds = det(nf.s), dt = det(nf.t);
        if (ds != 1 && ds != -1)
            chk.fail("s not unimodular on trial " + std::to_string(trial));
        if (dt != 1 && dt != -1)
            chk.fail("t not unimodular on trial " + std::to_string(trial));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && nf.d(i, j) != 0)
                    chk.fail("d not diagonal on trial " + std::to_string(trial));
        for (std::size_t i = 0; i + 1 < nf.divisors.size(); ++i)
            if (nf.divisors[i + 1] % nf.divisors[i] != 0)
                chk.fail("divisor chain broken on trial " + std::to_string(trial));
        if (nf.s * nf.s_inv != IntMatrix::identity(r) || nf.t * nf.t_inv != IntMatrix::identity(c))
            chk.fail("inverse accumulators wrong on trial " + std::to_string(trial));
    }
    if (chk.ok)
        chk.detail << "500 determinants vs cofactor expansion, 200 diagonalizations with "
                      "transform and chain checks";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

CriterionResult criterion_embedding() {
    CriterionResult res;
    Check chk;
    for (std::size_t g = 3; g <= 8; ++g) {
        USpace us = u_space(g); // construction verifies p e = 0 and p q = 1
        std::size_t n = 2 * g * (2 * g - 1) * (2 * g - 2) / 6;
        if (us.r != n - 2 * g)
            chk.fail("g=" + std::to_string(g) + ": quotient rank " + std::to_string(us.r) +
                     " != " + std::to_string(n - 2 * g));
        SnfResult nf = snf(us.e);
        if (nf.rank != 2 * g)
            chk.fail("g=" + std::to_string(g) + ": embedding rank " + std::to_string(nf.rank));
        for (const Integer& d : nf.divisors)
            if (d != 1) {
                chk.fail("g=" + std::to_string(g) + ": elementary divisor " + d.str());
                break;
            }
    }
    if (chk.ok)
        chk.detail << "g=3..8: all elementary divisors 1, rank of the quotient is C(2g,3) - 2g";
    res.pass = chk.ok;
    res.detail = chk.detail.str();
    return res;
}

struct CriterionEntry {
    int id;
    const char* name;
    double budget_ms;
    CriterionResult (*fn)();
};

const CriterionEntry kCriteria[] = {
    {1, "pairing determinant across the genus sweep", 5000.0, criterion_pairing_sweep},
    {2, "twist tables match the closed forms", 10000.0, criterion_twist_tables},
    {3, "fixed sublattice of the cube quotient", 30000.0, criterion_fixed_sublattice},
    {4, "pullbacks preserve the refinement identity", 10000.0, criterion_pullback_invariant},
    {5, "twist invariant is basis independent", 10000.0, criterion_basis_invariance},
    {6, "coset representatives are pairwise inequivalent", 30000.0, criterion_coset_reps},
    {7, "generic witness separates the four standard splittings", 10000.0,
     criterion_generic_witness},
    {8, "determinant and diagonalization against independent oracles", 10000.0,
     criterion_normal_form_oracles},
    {9, "quotient embedding is split across the genus sweep", 20000.0, criterion_embedding},
};

CriterionResult guard(const CriterionEntry& entry) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
        res = entry.fn();
    } catch (const std::exception& e) {
        // A criterion that throws is a failing criterion, not a crash.
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.id = entry.id;
    res.name = entry.name;
    res.budget_ms = entry.budget_ms;
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    if (res.pass && res.ms > res.budget_ms) {
        res.pass = false;
        res.detail += " [exceeded time budget]";
    }
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(unsigned jobs) {
    const std::size_t count = sizeof kCriteria / sizeof kCriteria[0];
    std::vector<CriterionResult> results(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = guard(kCriteria[i]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t workers = jobs < count ? jobs : count;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&results, w, workers, count] {
                for (std::size_t i = w; i < count; i += workers)
                    results[i] = guard(kCriteria[i]);
            });
        for (std::thread& th : pool)
            th.join();
    }
    return results;
}

} // namespace kgc

#include "kgc/witness.hpp"

#include "kgc/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace kgc {

std::vector<IntMatrix> projections(const SymplecticContext& ctx, const Splitting& s) {
    if (s.genus() != ctx.genus())
        throw dimension_error("projections: genus mismatch");
    const std::size_t d = ctx.dim(), g = ctx.genus();
    IntMatrix b(d, d); // columns 2i, 2i+1 = basis of summand i+1
    for (std::size_t i = 0; i < g; ++i) {
        b.set_col(2 * i, s.summands()[i].row(0));
        b.set_col(2 * i + 1, s.summands()[i].row(1));
    }
    // b is unimodular (splitting invariant), so s_nf b t_nf = 1 gives
    // b^{-1} = t_nf s_nf exactly.
    SnfResult nf = snf(b);
    if (nf.d != IntMatrix::identity(d))
        throw invalid_input_error("projections: summand stack is not unimodular");
    IntMatrix binv = nf.t * nf.s;

    std::vector<IntMatrix> proj;
    proj.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        IntMatrix sel(d, d);
        sel(2 * i, 2 * i) = 1;
        sel(2 * i + 1, 2 * i + 1) = 1;
        proj.push_back(b * sel * binv);
    }
    return proj;
}

std::size_t distinguishing_index(const SymplecticContext& ctx, const Splitting& s,
                                 const Splitting& t) {
    if (s.genus() != ctx.genus() || t.genus() != ctx.genus())
        throw dimension_error("distinguishing_index: genus mismatch");
    for (std::size_t i = 0; i < ctx.genus(); ++i) {
        // Summand bases are canonical HNFs, so lattice equality is matrix
        // equality.
        bool shared = false;
        for (const IntMatrix& other : t.summands())
            if (s.summands()[i] == other) {
                shared = true;
                break;
            }
        if (!shared)
            return i + 1;
    }
    throw exhaustion_error("distinguishing_index: splittings are identical", 0);
}

namespace {

struct PreparedProblem {
    std::vector<std::vector<IntMatrix>> proj;   // [s][i]
    std::vector<std::vector<std::size_t>> idx;  // [s][q], s < q, 1-based positions
    std::vector<const IntMatrix*> forms;        // every matrix that must not kill x
    std::vector<IntMatrix> diffs;               // storage for the difference forms
};

PreparedProblem prepare(const SymplecticContext& ctx, const WitnessProblem& problem) {
    if (problem.g != ctx.genus())
        throw dimension_error("find_generic_x: genus mismatch");
    if (problem.splittings.empty())
        throw invalid_input_error("find_generic_x: no splittings to separate");
    const std::size_t m = problem.splittings.size(), g = ctx.genus();

    PreparedProblem prep;
    prep.proj.reserve(m);
    for (const Splitting& s : problem.splittings) {
        if (s.genus() != ctx.genus())
            throw dimension_error("find_generic_x: splitting genus mismatch");
        prep.proj.push_back(projections(ctx, s));
    }

    prep.idx.assign(m, std::vector<std::size_t>(m, 0));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t q = s + 1; q < m; ++q)
            prep.idx[s][q] =
                distinguishing_index(ctx, problem.splittings[s], problem.splittings[q]);

    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t i = 0; i < g; ++i)
            prep.forms.push_back(&prep.proj[s][i]);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t q = s + 1; q < m; ++q) {
            const IntMatrix& star = prep.proj[s][prep.idx[s][q] - 1];
            for (std::size_t j = 0; j < g; ++j)
                prep.diffs.push_back(star - prep.proj[q][j]);
        }
    for (const IntMatrix& d : prep.diffs)
        prep.forms.push_back(&d);
    return prep;
}

bool admissible(const PreparedProblem& prep, const HVector& x) {
    for (const IntMatrix* f : prep.forms)
        if (is_zero_vector(*f * x))
            return false;
    return true;
}

} // namespace

WitnessResult find_generic_x(const SymplecticContext& ctx, const WitnessProblem& problem,
                             std::size_t max_shell) {
    PreparedProblem prep = prepare(ctx, problem);
    const std::size_t d = ctx.dim();

    std::size_t tested = 0;
    HVector x(d);
    std::vector<long> v(d, 0);

    for (std::size_t shell = 1; shell <= max_shell; ++shell) {
        const long lo = -static_cast<long>(shell), hi = static_cast<long>(shell);
        std::fill(v.begin(), v.end(), lo);
        while (true) {
            // Only the surface of the box: skip interior points (they were
            // enumerated in earlier shells).
            bool on_shell = false;
            for (long c : v)
                if (c == lo || c == hi) {
                    on_shell = true;
                    break;
                }
            if (on_shell) {
                ++tested;
                for (std::size_t i = 0; i < d; ++i)
                    x[i] = v[i];
                if (admissible(prep, x)) {
                    WitnessResult res;
                    res.x = x;
                    res.index = prep.idx;
                    res.grid.resize(problem.splittings.size());
                    for (std::size_t s = 0; s < problem.splittings.size(); ++s) {
                        res.grid[s].reserve(ctx.genus());
                        for (std::size_t i = 0; i < ctx.genus(); ++i) {
                            WitnessComponent cell;
                            cell.component = prep.proj[s][i] * x;
                            PrimitivePart pp = primitive_part(cell.component);
                            cell.multiplier = pp.multiplier;
                            cell.primitive = std::move(pp.primitive);
                            res.grid[s].push_back(std::move(cell));
                        }
                    }
                    return res;
                }
            }
            // Lexicographic successor: last coordinate runs fastest.
            std::size_t pos = d;
            while (pos > 0) {
                if (v[pos - 1] < hi) {
                    ++v[pos - 1];
                    std::fill(v.begin() + static_cast<long>(pos), v.end(), lo);
                    break;
                }
                --pos;
            }
            if (pos == 0)
                break;
        }
    }
    throw exhaustion_error("find_generic_x: no witness with coordinates up to " +
                               std::to_string(max_shell) + " (" + std::to_string(tested) +
                               " candidates tested)",
                           tested);
}

bool verify_generic(const SymplecticContext& ctx, const HVector& x,
                    const WitnessProblem& problem) {
    if (x.size() != ctx.dim())
        throw dimension_error("verify_generic: vector length mismatch");
    const std::size_t m = problem.splittings.size(), g = ctx.genus();
    std::vector<std::vector<HVector>> comps(m);
    for (std::size_t s = 0; s < m; ++s) {
        std::vector<IntMatrix> proj = projections(ctx, problem.splittings[s]);
        comps[s].reserve(g);
        for (std::size_t i = 0; i < g; ++i) {
            HVector c = proj[i] * x;
            if (is_zero_vector(c))
                return false;
            comps[s].push_back(std::move(c));
        }
        std::sort(comps[s].begin(), comps[s].end());
    }
    // Pairwise distinct as multisets of component vectors.
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t q = s + 1; q < m; ++q)
            if (comps[s] == comps[q])
                return false;
    return true;
}

} // namespace kgc

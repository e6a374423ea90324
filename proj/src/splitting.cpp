#include "kgc/splitting.hpp"

#include "kgc/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <utility>

namespace kgc {

namespace {

// Descending lexicographic on the flattened entries; total order on distinct
// canonical bases.
bool summand_before(const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c) != b(r, c))
                return a(r, c) > b(r, c);
        }
    return false;
}

} // namespace

Splitting::Splitting(const SymplecticContext& ctx, std::vector<IntMatrix> summand_bases)
    : g_(ctx.genus()) {
    if (summand_bases.size() != g_)
        throw invalid_input_error("Splitting: expected " + std::to_string(g_) + " summands, got " +
                                  std::to_string(summand_bases.size()));
    summands_.reserve(g_);
    std::vector<LatticeBasis> lattices;
    lattices.reserve(g_);
    for (IntMatrix& raw : summand_bases) {
        if (raw.cols() != ctx.dim())
            throw dimension_error("Splitting: summand vectors must have length " +
                                  std::to_string(ctx.dim()));
        LatticeBasis h = hnf(raw);
        if (h.rank() != 2)
            throw invalid_input_error("Splitting: summand is not rank 2");
        lattices.push_back(h);
        summands_.push_back(h.rows());
    }
    // Pairwise orthogonality under the pairing.
    for (std::size_t s = 0; s < g_; ++s)
        for (std::size_t t = s + 1; t < g_; ++t)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t k = 0; k < 2; ++k)
                    if (ctx.intersection(lattices[s].vector(i), lattices[t].vector(k)) != 0)
                        throw invalid_input_error("Splitting: summands " + std::to_string(s + 1) +
                                                  " and " + std::to_string(t + 1) +
                                                  " are not orthogonal");
    // Direct sum must be the whole lattice.  Orthogonality plus a unimodular
    // stack also forces each summand to be symplectically unimodular, so no
    // separate check per summand is needed.
    IntMatrix stack(2 * g_, ctx.dim());
    for (std::size_t s = 0; s < g_; ++s) {
        stack.set_row(2 * s, summands_[s].row(0));
        stack.set_row(2 * s + 1, summands_[s].row(1));
    }
    Integer d = det(stack);
    if (d != 1 && d != -1)
        throw invalid_input_error("Splitting: summands do not span the whole lattice (det " +
                                  d.str() + ")");
    std::sort(summands_.begin(), summands_.end(), summand_before);
}

const IntMatrix& Splitting::summand(std::size_t i) const {
    if (i < 1 || i > g_)
        throw dimension_error("Splitting::summand: position " + std::to_string(i) + " of " +
                              std::to_string(g_));
    return summands_[i - 1];
}

std::string Splitting::signature_key() const {
    std::string key;
    for (const IntMatrix& m : summands_)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                key += m(r, c).str();
                key += ',';
            }
    return key;
}

Splitting standard_splitting(const SymplecticContext& ctx) {
    std::vector<IntMatrix> bases;
    bases.reserve(ctx.genus());
    for (std::size_t i = 1; i <= ctx.genus(); ++i) {
        IntMatrix b(2, ctx.dim());
        b.set_row(0, ctx.a(i));
        b.set_row(1, ctx.b(i));
        bases.push_back(std::move(b));
    }
    return Splitting(ctx, std::move(bases));
}

Splitting apply(const SpElement& x, const Splitting& s) {
    if (x.genus() != s.genus())
        throw dimension_error("apply: genus mismatch");
    SymplecticContext ctx(s.genus());
    std::vector<IntMatrix> images;
    images.reserve(s.genus());
    for (const IntMatrix& b : s.summands()) {
        IntMatrix img(2, ctx.dim());
        img.set_row(0, x.apply(b.row(0)));
        img.set_row(1, x.apply(b.row(1)));
        images.push_back(std::move(img));
    }
    return Splitting(ctx, std::move(images));
}

bool in_stabilizer(const SymplecticContext& ctx, const SpElement& x) {
    Splitting w0 = standard_splitting(ctx);
    return apply(x, w0) == w0;
}

bool same_left_coset(const SymplecticContext& ctx, const SpElement& x, const SpElement& y) {
    return in_stabilizer(ctx, x.inverse() * y);
}

std::vector<SpElement> default_coset_generators(const SymplecticContext& ctx) {
    std::vector<SpElement> gens;
    gens.reserve(4 * ctx.genus() - 2);
    for (std::size_t i = 1; i <= ctx.genus(); ++i) {
        gens.push_back(transvection(ctx, ctx.a(i)));
        gens.push_back(transvection(ctx, ctx.b(i)));
    }
    for (std::size_t i = 1; i < ctx.genus(); ++i) {
        HVector aa = ctx.a(i);
        aa[ctx.a_index(i + 1)] = 1;
        gens.push_back(transvection(ctx, aa));
        HVector bb = ctx.b(i);
        bb[ctx.b_index(i + 1)] = 1;
        gens.push_back(transvection(ctx, bb));
    }
    return gens;
}

std::vector<SpElement> enumerate_coset_reps(const SymplecticContext& ctx, std::size_t count,
                                            const std::vector<SpElement>& generators) {
    if (count == 0)
        return {};
    for (const SpElement& gen : generators)
        if (gen.genus() != ctx.genus())
            throw dimension_error("enumerate_coset_reps: generator genus mismatch");

    Splitting w0 = standard_splitting(ctx);
    std::vector<SpElement> reps;
    reps.reserve(count);
    std::unordered_set<std::string> seen;
    std::deque<SpElement> frontier;

    SpElement id = SpElement::identity(ctx);
    seen.insert(apply(id, w0).signature_key());
    reps.push_back(id);
    frontier.push_back(id);

    while (reps.size() < count && !frontier.empty()) {
        SpElement cur = frontier.front();
        frontier.pop_front();
        for (const SpElement& gen : generators) {
            SpElement next = gen * cur; // extend the word on the left
            if (seen.insert(apply(next, w0).signature_key()).second) {
                reps.push_back(next);
                frontier.push_back(next);
                if (reps.size() == count)
                    return reps;
            }
        }
    }
    if (reps.size() < count)
        throw exhaustion_error("enumerate_coset_reps: generators reach only " +
                                   std::to_string(reps.size()) + " cosets, " +
                                   std::to_string(count) + " requested",
                               reps.size());
    return reps;
}

std::vector<SpElement> enumerate_coset_reps(const SymplecticContext& ctx, std::size_t count) {
    return enumerate_coset_reps(ctx, count, default_coset_generators(ctx));
}

} // namespace kgc

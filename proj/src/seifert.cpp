#include "kgc/seifert.hpp"

#include "kgc/errors.hpp"
#include "kgc/linalg.hpp"

#include <string>
#include <utility>

namespace kgc {

SeifertForm::SeifertForm(const SymplecticContext& ctx, IntMatrix m)
    : g_(ctx.genus()), m_(std::move(m)) {
    if (m_.rows() != ctx.dim() || m_.cols() != ctx.dim())
        throw dimension_error("SeifertForm: matrix must be " + std::to_string(ctx.dim()) + "x" +
                              std::to_string(ctx.dim()));
    if (m_.transpose() - m_ != ctx.j())
        throw invalid_input_error("SeifertForm: form does not refine the pairing (m^T - m != j)");
}

Integer SeifertForm::operator()(const HVector& x, const HVector& y) const {
    if (x.size() != m_.rows() || y.size() != m_.rows())
        throw dimension_error("SeifertForm: vector length mismatch");
    Integer acc = 0;
    for (std::size_t r = 0; r < m_.rows(); ++r) {
        if (x[r] == 0)
            continue;
        Integer row = 0;
        for (std::size_t c = 0; c < m_.cols(); ++c)
            if (m_(r, c) != 0 && y[c] != 0)
                row += m_(r, c) * y[c];
        acc += x[r] * row;
    }
    return acc;
}

SeifertForm base_seifert(const SymplecticContext& ctx) {
    IntMatrix m(ctx.dim(), ctx.dim());
    for (std::size_t i = 1; i <= ctx.genus(); ++i)
        m(ctx.b_index(i), ctx.a_index(i)) = 1;
    return SeifertForm(ctx, std::move(m));
}

SeifertForm pullback(const SeifertForm& l, const SpElement& psi) {
    if (l.genus() != psi.genus())
        throw dimension_error("pullback: genus mismatch");
    SymplecticContext ctx(l.genus());
    return SeifertForm(ctx, psi.matrix().transpose() * l.matrix() * psi.matrix());
}

SeparatingTwistSpec::SeparatingTwistSpec(const SymplecticContext& ctx,
                                         std::vector<std::pair<HVector, HVector>> pairs)
    : g_(ctx.genus()), pairs_(std::move(pairs)) {
    const std::size_t gp = pairs_.size();
    if (gp < 1 || gp > g_)
        throw invalid_input_error("SeparatingTwistSpec: subsurface genus " + std::to_string(gp) +
                                  " outside 1.." + std::to_string(g_));
    for (const auto& [av, bv] : pairs_)
        if (av.size() != ctx.dim() || bv.size() != ctx.dim())
            throw dimension_error("SeparatingTwistSpec: vector length mismatch");
    for (std::size_t s = 0; s < gp; ++s)
        for (std::size_t t = 0; t < gp; ++t) {
            if (ctx.intersection(pairs_[s].first, pairs_[t].first) != 0)
                throw invalid_input_error("SeparatingTwistSpec: a_" + std::to_string(s + 1) +
                                          " . a_" + std::to_string(t + 1) + " != 0");
            if (ctx.intersection(pairs_[s].second, pairs_[t].second) != 0)
                throw invalid_input_error("SeparatingTwistSpec: b_" + std::to_string(s + 1) +
                                          " . b_" + std::to_string(t + 1) + " != 0");
            Integer want = (s == t) ? 1 : 0;
            if (ctx.intersection(pairs_[s].first, pairs_[t].second) != want)
                throw invalid_input_error("SeparatingTwistSpec: a_" + std::to_string(s + 1) +
                                          " . b_" + std::to_string(t + 1) + " != " + want.str());
        }
    // The vectors must span a direct summand: a basis extendable to the whole
    // lattice, equivalently all elementary divisors 1.  A symplectic pairing
    // table alone does not give this over Z (it does over Q).
    SnfResult nf = snf(stacked());
    if (nf.rank != 2 * gp)
        throw invalid_input_error("SeparatingTwistSpec: vectors are dependent");
    for (const Integer& dvr : nf.divisors)
        if (dvr != 1)
            throw invalid_input_error("SeparatingTwistSpec: vectors do not span a direct summand");
}

IntMatrix SeparatingTwistSpec::stacked() const {
    IntMatrix m(2 * pairs_.size(), 2 * g_);
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        m.set_row(2 * s, pairs_[s].first);
        m.set_row(2 * s + 1, pairs_[s].second);
    }
    return m;
}

SeparatingTwistSpec delta_spec(const SymplecticContext& ctx, std::size_t i) {
    if (i < 1 || i > ctx.genus())
        throw invalid_input_error("delta_spec: handle " + std::to_string(i) + " outside 1.." +
                                  std::to_string(ctx.genus()));
    return SeparatingTwistSpec(ctx, {{ctx.a(i), ctx.b(i)}});
}

SeparatingTwistSpec epsilon_spec(const SymplecticContext& ctx, std::size_t i) {
    if (ctx.genus() < 4 || i < 2 || i > ctx.genus() - 2)
        throw invalid_input_error("epsilon_spec: need 2 <= i <= g-2 with g >= 4, got i=" +
                                  std::to_string(i) + " g=" + std::to_string(ctx.genus()));
    std::vector<std::pair<HVector, HVector>> pairs;
    pairs.reserve(i);
    for (std::size_t s = 1; s <= i; ++s)
        pairs.emplace_back(ctx.a(s), ctx.b(s));
    return SeparatingTwistSpec(ctx, std::move(pairs));
}

namespace {

// Gram matrix of the spec's vectors under l, in the order a_1, b_1, a_2, ...
IntMatrix gram(const SeifertForm& l, const SeparatingTwistSpec& spec) {
    IntMatrix bm = spec.stacked().transpose(); // columns are the spec vectors
    return bm.transpose() * l.matrix() * bm;
}

} // namespace

Integer morita_lambda(const SeifertForm& l, const SeparatingTwistSpec& spec) {
    if (l.genus() != spec.genus())
        throw dimension_error("morita_lambda: genus mismatch");
    IntMatrix gm = gram(l, spec);
    const std::size_t gp = spec.sub_genus();
    Integer acc = 0;
    for (std::size_t s = 0; s < gp; ++s)
        for (std::size_t t = 0; t < gp; ++t)
            acc += gm(2 * s, 2 * t) * gm(2 * s + 1, 2 * t + 1) -
                   gm(2 * s, 2 * t + 1) * gm(2 * s + 1, 2 * t);
    return acc;
}

Integer morita_lambda_split(const SeifertForm& l, const SeparatingTwistSpec& spec) {
    if (l.genus() != spec.genus())
        throw dimension_error("morita_lambda_split: genus mismatch");
    IntMatrix gm = gram(l, spec);
    const std::size_t gp = spec.sub_genus();
    Integer acc = 0;
    for (std::size_t s = 0; s < gp; ++s)
        acc += gm(2 * s, 2 * s) * gm(2 * s + 1, 2 * s + 1) -
               gm(2 * s, 2 * s + 1) * gm(2 * s + 1, 2 * s);
    for (std::size_t s = 0; s < gp; ++s)
        for (std::size_t t = s + 1; t < gp; ++t)
            acc += 2 * (gm(2 * s, 2 * t) * gm(2 * s + 1, 2 * t + 1) -
                        gm(2 * s, 2 * t + 1) * gm(2 * t, 2 * s + 1));
    return acc;
}

LambdaTable lambda_pq_table(const SymplecticContext& ctx, std::size_t p, std::size_t q) {
    SeifertForm l = pullback(base_seifert(ctx), psi_pq(ctx, p, q));
    LambdaTable table;
    table.g = ctx.genus();
    table.p = p;
    table.q = q;
    table.delta.reserve(ctx.genus());
    for (std::size_t i = 1; i <= ctx.genus(); ++i)
        table.delta.push_back(morita_lambda(l, delta_spec(ctx, i)));
    if (ctx.genus() >= 4)
        for (std::size_t i = 2; i + 2 <= ctx.genus(); ++i)
            table.epsilon.push_back(morita_lambda(l, epsilon_spec(ctx, i)));
    return table;
}

} // namespace kgc

#include "kgc/pairing.hpp"

#include "kgc/errors.hpp"
#include "kgc/linalg.hpp"

#include <string>
#include <utility>

namespace kgc {

namespace {

LatticeBasis spec_lattice(const SeparatingTwistSpec& spec) {
    // Rows are independent (checked at spec construction: divisors all 1).
    return LatticeBasis::trusted(spec.stacked(), 2 * spec.genus());
}

bool orthogonal(const SymplecticContext& ctx, const SeparatingTwistSpec& s,
                const SeparatingTwistSpec& t) {
    IntMatrix sm = s.stacked(), tm = t.stacked();
    for (std::size_t i = 0; i < sm.rows(); ++i)
        for (std::size_t k = 0; k < tm.rows(); ++k)
            if (ctx.intersection(sm.row(i), tm.row(k)) != 0)
                return false;
    return true;
}

} // namespace

AbelianCycleSpec::AbelianCycleSpec(const SymplecticContext& ctx,
                                   std::vector<SeparatingTwistSpec> twists)
    : g_(ctx.genus()), twists_(std::move(twists)) {
    if (twists_.empty())
        throw invalid_input_error("AbelianCycleSpec: no twists");
    for (const SeparatingTwistSpec& t : twists_)
        if (t.genus() != g_)
            throw dimension_error("AbelianCycleSpec: twist genus mismatch");
    for (std::size_t s = 0; s < twists_.size(); ++s)
        for (std::size_t t = s + 1; t < twists_.size(); ++t) {
            if (orthogonal(ctx, twists_[s], twists_[t]))
                continue;
            LatticeBasis ls = spec_lattice(twists_[s]), lt = spec_lattice(twists_[t]);
            if (lattice_subset(ls, lt) || lattice_subset(lt, ls))
                continue;
            throw invalid_input_error(
                "AbelianCycleSpec: twists " + std::to_string(s + 1) + " and " +
                std::to_string(t + 1) +
                " have summands neither orthogonal nor nested; such twists need not commute");
        }
}

std::vector<CocycleRef> phi_cocycles(std::size_t g) {
    if (g < 3)
        throw invalid_input_error("phi_cocycles: genus must be at least 3");
    std::vector<CocycleRef> refs;
    refs.reserve(2 * g - 3);
    for (std::size_t q = 2; q <= g; ++q)
        refs.push_back({1, q});
    for (std::size_t p = 2; p + 1 <= g; ++p)
        refs.push_back({p, p + 1});
    return refs;
}

AbelianCycleSpec standard_abelian_cycle(const SymplecticContext& ctx) {
    if (ctx.genus() < 3)
        throw invalid_input_error("standard_abelian_cycle: genus must be at least 3");
    std::vector<SeparatingTwistSpec> twists;
    twists.reserve(2 * ctx.genus() - 3);
    for (std::size_t i = 1; i <= ctx.genus(); ++i)
        twists.push_back(delta_spec(ctx, i));
    for (std::size_t i = 2; i + 2 <= ctx.genus(); ++i)
        twists.push_back(epsilon_spec(ctx, i));
    return AbelianCycleSpec(ctx, std::move(twists));
}

IntMatrix pairing_matrix(const SymplecticContext& ctx, const std::vector<CocycleRef>& cocycles,
                         const AbelianCycleSpec& cycle) {
    if (cycle.genus() != ctx.genus())
        throw dimension_error("pairing_matrix: genus mismatch");
    if (cocycles.size() != cycle.size())
        throw dimension_error("pairing_matrix: " + std::to_string(cocycles.size()) +
                              " cocycles against " + std::to_string(cycle.size()) + " twists");
    SeifertForm base = base_seifert(ctx);
    IntMatrix c(cocycles.size(), cycle.size());
    for (std::size_t i = 0; i < cocycles.size(); ++i) {
        SeifertForm li = pullback(base, psi_pq(ctx, cocycles[i].p, cocycles[i].q));
        for (std::size_t j = 0; j < cycle.size(); ++j)
            c(i, j) = morita_lambda(li, cycle.twists()[j]);
    }
    return c;
}

Integer abelian_pairing(const IntMatrix& c) {
    if (!c.is_square())
        throw dimension_error("abelian_pairing: value matrix must be square");
    const std::size_t k = c.rows();
    Integer d = det(c);
    return (k * (k - 1) / 2) % 2 == 0 ? d : Integer(-d);
}

Prop22Report verify_prop22(const SymplecticContext& ctx) {
    const std::size_t g = ctx.genus();
    Prop22Report rep;
    rep.g = g;
    IntMatrix c = pairing_matrix(ctx, phi_cocycles(g), standard_abelian_cycle(ctx));
    rep.det_c = det(c);
    rep.pairing = abelian_pairing(c);
    Integer pow2 = Integer(1) << (g - 2);
    rep.expected = (g % 2 == 1) ? pow2 : Integer(-pow2);
    rep.pass = (rep.pairing == rep.expected) && (rep.det_c == -pow2);
    return rep;
}

} // namespace kgc

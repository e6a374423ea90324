#include "kgc/wedge.hpp"

#include "kgc/errors.hpp"

#include <string>
#include <utility>

namespace kgc {

std::size_t USpace::triple_index(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t d = 2 * g;
    if (!(i < j && j < k && k < d))
        throw dimension_error("triple_index: need i < j < k < " + std::to_string(d));
    return index_[(i * d + j) * d + k];
}

USpace u_space(std::size_t g) {
    if (g < 3)
        throw invalid_input_error("u_space: genus must be at least 3, got " + std::to_string(g));
    USpace us;
    us.g = g;
    const std::size_t d = 2 * g;
    us.n = d * (d - 1) * (d - 2) / 6;
    us.r = us.n - d;

    us.triples.reserve(us.n);
    us.index_.assign(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                us.index_[(i * d + j) * d + k] = us.triples.size();
                us.triples.push_back({i, j, k});
            }

    // e_i ^ omega = sum over handles s not containing slot i of
    // e_i ^ e_{2s} ^ e_{2s+1}.  Sorting the triple is an even permutation in
    // both possible orders (i first or i last), so every coefficient is +1.
    us.e = IntMatrix(us.n, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t s = 0; s < g; ++s) {
            if (2 * s == i || 2 * s + 1 == i)
                continue;
            std::size_t t = i < 2 * s ? us.triple_index(i, 2 * s, 2 * s + 1)
                                      : us.triple_index(2 * s, 2 * s + 1, i);
            us.e(t, i) = 1;
        }

    SnfResult nf = snf(us.e);
    if (nf.rank != d)
        throw invalid_input_error("u_space: embedding is not injective"); // unreachable
    for (const Integer& dvr : nf.divisors)
        if (dvr != 1)
            throw invalid_input_error("u_space: embedding has a nontrivial divisor " + dvr.str());

    us.p = nf.s.block(d, us.n, 0, us.n);
    us.q = nf.s_inv.block(0, us.n, d, us.n);

    if (!(us.p * us.e).is_zero())
        throw invalid_input_error("u_space: projection does not kill the embedding");
    if (us.p * us.q != IntMatrix::identity(us.r))
        throw invalid_input_error("u_space: section is not a section");

    // FNV-1a over the section entries; rebinds UVectors to this q.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    mix(std::to_string(us.n) + ";" + std::to_string(us.r) + ";");
    for (std::size_t i = 0; i < us.n; ++i)
        for (std::size_t j = 0; j < us.r; ++j)
            mix(us.q(i, j).str() + ";");
    us.fingerprint = h;
    return us;
}

std::vector<Integer> wedge3_vec(const USpace& us, const HVector& x, const HVector& y,
                                const HVector& z) {
    const std::size_t d = 2 * us.g;
    if (x.size() != d || y.size() != d || z.size() != d)
        throw dimension_error("wedge3_vec: vectors must have length " + std::to_string(d));
    std::vector<Integer> w(us.n);
    for (std::size_t t = 0; t < us.n; ++t) {
        const auto& [i, j, k] = us.triples[t];
        w[t] = x[i] * (y[j] * z[k] - y[k] * z[j]) - y[i] * (x[j] * z[k] - x[k] * z[j]) +
               z[i] * (x[j] * y[k] - x[k] * y[j]);
    }
    return w;
}

IntMatrix wedge3_matrix(const USpace& us, const IntMatrix& m) {
    const std::size_t d = 2 * us.g;
    if (m.rows() != d || m.cols() != d)
        throw dimension_error("wedge3_matrix: matrix must be " + std::to_string(d) + "x" +
                              std::to_string(d));
    std::vector<HVector> cols(d);
    for (std::size_t c = 0; c < d; ++c)
        cols[c] = m.col(c);
    IntMatrix w(us.n, us.n);
    for (std::size_t t = 0; t < us.n; ++t) {
        const auto& [i, j, k] = us.triples[t];
        w.set_col(t, wedge3_vec(us, cols[i], cols[j], cols[k]));
    }
    return w;
}

std::vector<Integer> u_class(const USpace& us, const HVector& x, const HVector& y,
                             const HVector& z) {
    return us.p * wedge3_vec(us, x, y, z);
}

IntMatrix induced_on_U(const USpace& us, const SpElement& x) {
    if (x.genus() != us.g)
        throw dimension_error("induced_on_U: genus mismatch");
    return us.p * wedge3_matrix(us, x.matrix()) * us.q;
}

UVector make_uvector(const USpace& us, std::vector<Integer> coords) {
    if (coords.size() != us.r)
        throw dimension_error("make_uvector: expected " + std::to_string(us.r) + " coordinates");
    UVector v;
    v.g = us.g;
    v.fingerprint = us.fingerprint;
    v.coords = std::move(coords);
    return v;
}

namespace {

void check_basis(const USpace& us, const SpElement& basis) {
    if (basis.genus() != us.g)
        throw dimension_error("wedge: basis genus mismatch");
}

HVector basis_a(const SpElement& basis, std::size_t i) { return basis.matrix().col(2 * i); }
HVector basis_b(const SpElement& basis, std::size_t i) { return basis.matrix().col(2 * i + 1); }

// Rows: classes of all monomials with >= 2 factors from `first` (first = the
// a-columns for ua, the b-columns for ub).
IntMatrix heavy_rows(const USpace& us, const SpElement& basis, bool a_heavy) {
    const std::size_t g = us.g;
    auto first = [&](std::size_t i) { return a_heavy ? basis_a(basis, i) : basis_b(basis, i); };
    auto second = [&](std::size_t i) { return a_heavy ? basis_b(basis, i) : basis_a(basis, i); };
    const std::size_t count = g * (g - 1) * (g - 2) / 6 + g * (g * (g - 1) / 2);
    IntMatrix rows(count, us.r);
    std::size_t at = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            for (std::size_t k = j + 1; k < g; ++k)
                rows.set_row(at++, u_class(us, first(i), first(j), first(k)));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            for (std::size_t k = 0; k < g; ++k)
                rows.set_row(at++, u_class(us, first(i), first(j), second(k)));
    return rows;
}

} // namespace

LatticeBasis ua_lattice(const USpace& us, const SpElement& basis) {
    check_basis(us, basis);
    return hnf(heavy_rows(us, basis, true));
}

LatticeBasis ub_lattice(const USpace& us, const SpElement& basis) {
    check_basis(us, basis);
    return hnf(heavy_rows(us, basis, false));
}

bool in_ua(const USpace& us, const UVector& theta, const SpElement& basis) {
    if (theta.fingerprint != us.fingerprint)
        throw invalid_input_error("in_ua: UVector was built against a different section");
    return in_lattice(theta.coords, ua_lattice(us, basis));
}

bool in_ub(const USpace& us, const UVector& theta, const SpElement& basis) {
    if (theta.fingerprint != us.fingerprint)
        throw invalid_input_error("in_ub: UVector was built against a different section");
    return in_lattice(theta.coords, ub_lattice(us, basis));
}

FixedSublatticeReport fixed_sublattice_check(const USpace& us, const SpElement& basis) {
    check_basis(us, basis);
    SymplecticContext ctx(us.g);
    const std::size_t g = us.g;

    // Fixed sublattice: common kernel of induced(T_{a_i}) - 1 over all i.
    IntMatrix stack(0, us.r);
    for (std::size_t i = 0; i < g; ++i) {
        IntMatrix m = induced_on_U(us, transvection(ctx, basis_a(basis, i)));
        stack = vstack(stack, m - IntMatrix::identity(us.r));
    }
    LatticeBasis computed = kernel_lattice(stack);

    // Claimed generators: a_i^a_j^a_k and a_i^a_j^b_j classes.  Dependent
    // (see header), so take the HNF basis of their span.
    const std::size_t count = g * (g - 1) * (g - 2) / 6 + g * (g - 1);
    IntMatrix gens(count, us.r);
    std::size_t at = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            for (std::size_t k = j + 1; k < g; ++k)
                gens.set_row(at++, u_class(us, basis_a(basis, i), basis_a(basis, j), basis_a(basis, k)));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            if (j == i)
                continue;
            gens.set_row(at++, u_class(us, basis_a(basis, i), basis_a(basis, j), basis_b(basis, j)));
        }
    LatticeBasis claimed = hnf(gens);

    bool equal = lattice_equal(computed, claimed);
    std::size_t rank = computed.rank();
    return FixedSublatticeReport{std::move(computed), std::move(claimed), equal, rank};
}

FixedSublatticeReport fixed_sublattice_check(const USpace& us) {
    SymplecticContext ctx(us.g);
    return fixed_sublattice_check(us, SpElement::identity(ctx));
}

} // namespace kgc

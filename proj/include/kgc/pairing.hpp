#pragma once

#include "kgc/seifert.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kgc {

// A family of commuting separating twists, presented by their homology
// specs.  Commutation is certified homologically: for every pair of specs,
// the spanned summands must be orthogonal under the pairing or one must
// contain the other -- the two configurations disjoint separating curves can
// leave in homology (disjoint subsurfaces, or one inside the other).
class AbelianCycleSpec {
public:
    AbelianCycleSpec(const SymplecticContext& ctx, std::vector<SeparatingTwistSpec> twists);

    std::size_t genus() const noexcept { return g_; }
    std::size_t size() const noexcept { return twists_.size(); }
    const std::vector<SeparatingTwistSpec>& twists() const noexcept { return twists_; }

private:
    std::size_t g_;
    std::vector<SeparatingTwistSpec> twists_;
};

// The cocycle lambda_{p,q}, referenced by its handle pair.
struct CocycleRef {
    std::size_t p = 0, q = 0; // 1-based, p < q
};

// The 2g-3 cocycles evaluated against the standard cycle: (1,2) ... (1,g)
// then (2,3), (3,4) ... (g-1,g).
std::vector<CocycleRef> phi_cocycles(std::size_t g);

// The standard abelian cycle: the twists about delta_1 ... delta_g and
// epsilon_2 ... epsilon_{g-2} (the latter only for g >= 4); 2g-3 in total.
AbelianCycleSpec standard_abelian_cycle(const SymplecticContext& ctx);

// c[i][j] = value of cocycle i on twist j, each entry computed end-to-end:
// pull the base form back along psi_{p,q}, evaluate morita_lambda on the
// twist's spec.
IntMatrix pairing_matrix(const SymplecticContext& ctx, const std::vector<CocycleRef>& cocycles,
                         const AbelianCycleSpec& cycle);

// The pairing of the cocycle family with the abelian cycle:
// (-1)^{k(k-1)/2} det(c) for the k x k matrix of values.  (The sign converts
// the determinant of the value matrix into the alternating-sum evaluation of
// the wedge of cocycles on the cycle.)
Integer abelian_pairing(const IntMatrix& c);

// One genus of the headline computation: build the standard family and
// cycle, pair them, and compare against the closed forms
//     det c = -2^{g-2},   pairing = (-1)^{g-1} 2^{g-2}.
// Nonzero pairing is the certificate that the cycle class is nontrivial.
struct Prop22Report {
    std::size_t g = 0;
    Integer det_c;
    Integer pairing;
    Integer expected; // (-1)^{g-1} 2^{g-2}
    bool pass = false;
};

Prop22Report verify_prop22(const SymplecticContext& ctx);

} // namespace kgc

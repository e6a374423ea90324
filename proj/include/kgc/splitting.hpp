#pragma once

#include "kgc/linalg.hpp"
#include "kgc/symplectic.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kgc {

// Unordered decomposition of the rank-2g lattice into g rank-2 summands that
// are pairwise orthogonal under the pairing and together span everything.
// Stored canonically: each summand as its HNF basis (2 rows), summands
// sorted, so two splittings are equal iff their stored forms are identical
// -- that list of HNF bases is the signature.
//
// Canonical order: descending lexicographic on the flattened HNF entries.
// In the standard splitting this puts span{A_1, B_1} first and
// span{A_g, B_g} last, and "summand i" below always means position i
// (1-based) in this order.
class Splitting {
public:
    Splitting(const SymplecticContext& ctx, std::vector<IntMatrix> summand_bases);

    std::size_t genus() const noexcept { return g_; }
    const std::vector<IntMatrix>& summands() const noexcept { return summands_; }
    const IntMatrix& summand(std::size_t i) const; // 1-based canonical position

    // The signature rendered as one string (entries in canonical order);
    // used as a dedup key during enumeration.
    std::string signature_key() const;

    bool operator==(const Splitting& other) const {
        return g_ == other.g_ && summands_ == other.summands_;
    }
    bool operator!=(const Splitting& other) const { return !(*this == other); }

private:
    std::size_t g_;
    std::vector<IntMatrix> summands_; // canonical: each 2x2g in HNF, sorted
};

// span{A_1,B_1}, ..., span{A_g,B_g}.
Splitting standard_splitting(const SymplecticContext& ctx);

// Image splitting: x sends each summand to its image lattice.
Splitting apply(const SpElement& x, const Splitting& s);

// Does x fix the standard splitting (as an unordered decomposition)?
bool in_stabilizer(const SymplecticContext& ctx, const SpElement& x);

// Do x and y induce the same coset of the standard-splitting stabilizer,
// i.e. the same image splitting?  Decided through in_stabilizer(x^{-1} y),
// not by comparing signatures directly.
bool same_left_coset(const SymplecticContext& ctx, const SpElement& x, const SpElement& y);

// The transvections along A_i, B_i (all i), A_i + A_{i+1} and B_i + B_{i+1}
// (i < g): the generator set enumeration walks by default.
std::vector<SpElement> default_coset_generators(const SymplecticContext& ctx);

// Breadth-first search over words in the generators, deduplicating by image
// splitting: returns the first `count` words (as group elements) reaching
// pairwise distinct cosets, starting from the identity.  Word order is by
// length, then by discovery (generators in the given order), so the output
// is deterministic.  Throws exhaustion_error (carrying how many were found)
// if the generated subgroup reaches fewer than `count` cosets.
std::vector<SpElement> enumerate_coset_reps(const SymplecticContext& ctx, std::size_t count,
                                            const std::vector<SpElement>& generators);

std::vector<SpElement> enumerate_coset_reps(const SymplecticContext& ctx, std::size_t count);

} // namespace kgc

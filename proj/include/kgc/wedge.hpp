#pragma once

#include "kgc/linalg.hpp"
#include "kgc/symplectic.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kgc {

// The third exterior power of the rank-2g lattice, its invariant embedding
// x -> x ^ omega (omega = sum_i A_i ^ B_i), and an integral splitting of the
// quotient U = wedge^3 / image.
//
// Coordinates on wedge^3 are indexed by triples i < j < k of basis slots in
// lexicographic order (n = C(2g,3) of them).  The embedding matrix e has all
// elementary divisors 1, so the quotient is free of rank r = n - 2g and the
// Smith transforms yield an exact projection/section pair:
//     p e = 0,   p q = identity on Z^r.
// p's rows are the last r rows of s, q's columns the last r columns of
// s^{-1} (accumulated during elimination, never computed by inversion).
//
// q is one choice of section among many; every UVector serialized out of
// this structure carries fingerprint so coordinates from different sections
// cannot be mixed silently.
struct USpace {
    std::size_t g = 0;
    std::size_t n = 0; // C(2g,3)
    std::size_t r = 0; // n - 2g
    std::vector<std::array<std::size_t, 3>> triples;
    IntMatrix e; // n x 2g, columns are basis_vector ^ omega
    IntMatrix p; // r x n
    IntMatrix q; // n x r
    std::uint64_t fingerprint = 0;

    std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) const;

private:
    friend USpace u_space(std::size_t);
    std::vector<std::size_t> index_; // flat (2g)^3 lookup
};

// Builds the structure for genus g >= 3 and verifies p e = 0, p q = 1 and
// the unimodularity of the embedding before returning.
USpace u_space(std::size_t g);

// Coordinates of x ^ y ^ z in wedge^3 (3x3 minors of the column matrix
// [x y z]).
std::vector<Integer> wedge3_vec(const USpace& us, const HVector& x, const HVector& y,
                                const HVector& z);

// The functorial action of m on wedge^3: column (i,j,k) holds the
// coordinates of m_i ^ m_j ^ m_k where m_i is the i-th column of m.
IntMatrix wedge3_matrix(const USpace& us, const IntMatrix& m);

// Class of x ^ y ^ z in U.
std::vector<Integer> u_class(const USpace& us, const HVector& x, const HVector& y,
                             const HVector& z);

// The action x induces on U: p (wedge^3 x) q.  This is a group action
// because p q = 1 and the embedding's image is preserved by every
// symplectic x (omega is invariant).
IntMatrix induced_on_U(const USpace& us, const SpElement& x);

// Element of U tagged with the section that produced its coordinates.
struct UVector {
    std::size_t g = 0;
    std::uint64_t fingerprint = 0;
    std::vector<Integer> coords;
};

UVector make_uvector(const USpace& us, std::vector<Integer> coords);

// Fixed sublattice of U under the transvections along the a-columns of
// `basis` (columns 0, 2, 4, ... hold a_1, a_2, ...), versus the lattice
// spanned by the classes of a_i^a_j^a_k (i<j<k) and a_i^a_j^b_j (i != j).
//   computed: kernel of the stacked (induced(T_{a_i}) - 1)
//   claimed:  HNF basis of the span of the listed generator classes
// The generator classes are not independent in U -- each a_i ^ omega is an
// integral combination of them and is zero in U -- so `claimed` has fewer
// rows than there are generators; `rank` is the rank of `computed`.
struct FixedSublatticeReport {
    LatticeBasis computed;
    LatticeBasis claimed;
    bool equal;
    std::size_t rank;
};

FixedSublatticeReport fixed_sublattice_check(const USpace& us, const SpElement& basis);
FixedSublatticeReport fixed_sublattice_check(const USpace& us);

// Membership of a U-vector in the sublattice spanned by classes of monomials
// with at least two a-factors (respectively two b-factors) taken from the
// columns of `basis`.
bool in_ua(const USpace& us, const UVector& theta, const SpElement& basis);
bool in_ub(const USpace& us, const UVector& theta, const SpElement& basis);

// The two heavy sublattices themselves (HNF bases), for rank and
// direct-sum checks.
LatticeBasis ua_lattice(const USpace& us, const SpElement& basis);
LatticeBasis ub_lattice(const USpace& us, const SpElement& basis);

} // namespace kgc

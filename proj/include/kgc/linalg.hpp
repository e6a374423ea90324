#pragma once

#include "kgc/int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace kgc {

// Basis of a sublattice of Z^ambient; the rows are the basis vectors and are
// linearly independent over Q.  The public constructor checks independence
// eagerly (rank == row count) and throws invalid_input_error otherwise.
class LatticeBasis {
public:
    LatticeBasis(IntMatrix rows, std::size_t ambient);

    // Rank-0 lattice inside Z^ambient.
    static LatticeBasis empty(std::size_t ambient);

    // For algorithm outputs whose rows are independent by construction
    // (echelon forms); skips the rank check.
    static LatticeBasis trusted(IntMatrix rows, std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.rows(); }
    const IntMatrix& rows() const noexcept { return rows_; }
    std::vector<Integer> vector(std::size_t i) const { return rows_.row(i); }

    bool operator==(const LatticeBasis& other) const {
        return ambient_ == other.ambient_ && rows_ == other.rows_;
    }

private:
    LatticeBasis() : ambient_(0) {}
    IntMatrix rows_;
    std::size_t ambient_;
};

// Determinant by the Bareiss fraction-free elimination: every division is
// exact (each intermediate entry is a minor of the input), so no rationals
// ever appear.  Throws dimension_error unless the matrix is square.
Integer det(const IntMatrix& m);

// Rank over Q, by fraction-free elimination with column pivoting.
std::size_t rank(const IntMatrix& m);

// Row-style Hermite normal form of the row span: pivots positive, entries
// above each pivot reduced into [0, pivot), zero rows dropped, rows ordered
// by pivot column.  Two row spans are equal iff their HNFs are identical,
// which is what lattice_equal relies on.  The IntMatrix overload accepts
// dependent generating sets and returns a basis of their span.
LatticeBasis hnf(const IntMatrix& row_span);
LatticeBasis hnf(const LatticeBasis& basis);

// Smith normal form with full transform bookkeeping: s * a * t = d with
// |det s| = |det t| = 1.  The inverses are accumulated alongside (every
// elementary operation is mirrored by its inverse on the other side), never
// computed by matrix inversion; the wedge-cube module needs s_inv columns to
// build its section of the quotient.
struct SnfResult {
    IntMatrix d;
    IntMatrix s, s_inv;
    IntMatrix t, t_inv;
    std::vector<Integer> divisors; // nonzero diagonal of d, in chain order d0 | d1 | ...
    std::size_t rank = 0;
};

SnfResult snf(const IntMatrix& a);

// Basis of {x in Z^n : a x = 0}, HNF-canonical.  Integer kernels of integer
// matrices are automatically saturated: if k*x lies in the kernel so does x,
// hence Z^n / kernel is torsion-free and the basis extends to Z^n.
LatticeBasis kernel_lattice(const IntMatrix& a);

// Membership of v in the lattice spanned by basis (exact division against
// the echelon form).
bool in_lattice(const std::vector<Integer>& v, const LatticeBasis& basis);

// Every vector of inner lies in the lattice of outer.
bool lattice_subset(const LatticeBasis& inner, const LatticeBasis& outer);

// Same sublattice of the same ambient Z^n (equality of canonical HNFs).
// Throws dimension_error if the ambients differ.
bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

} // namespace kgc

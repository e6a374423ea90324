#pragma once

#include "kgc/int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace kgc {

// Vector in the rank-2g homology lattice, coordinates in the ordered basis
// (A_1, B_1, A_2, B_2, ..., A_g, B_g): A_i sits at index 2i-2, B_i at 2i-1.
using HVector = std::vector<Integer>;

// The lattice Z^{2g} carrying the standard alternating pairing: the pairing
// matrix j is block diagonal with 2x2 blocks [[0,1],[-1,0]], one per handle,
// so A_i . B_i = +1 and distinct handles never pair.
class SymplecticContext {
public:
    explicit SymplecticContext(std::size_t g);

    std::size_t genus() const noexcept { return g_; }
    std::size_t dim() const noexcept { return 2 * g_; }
    const IntMatrix& j() const noexcept { return j_; }

    // 1-based handle index i -> coordinate slot.
    std::size_t a_index(std::size_t i) const;
    std::size_t b_index(std::size_t i) const;

    HVector a(std::size_t i) const; // basis vector A_i
    HVector b(std::size_t i) const; // basis vector B_i
    HVector zero() const { return HVector(dim()); }

    // x . y = x^T j y, computed handle by handle.
    Integer intersection(const HVector& x, const HVector& y) const;

private:
    std::size_t g_;
    IntMatrix j_;
};

bool is_symplectic(const SymplecticContext& ctx, const IntMatrix& m);

// Element of Sp(2g, Z) acting on column vectors.  Construction checks
// m^T j m = j eagerly and throws invalid_input_error otherwise, so a held
// SpElement is always a genuine symplectic matrix.
class SpElement {
public:
    SpElement(const SymplecticContext& ctx, IntMatrix m);

    static SpElement identity(const SymplecticContext& ctx);

    std::size_t genus() const noexcept { return g_; }
    const IntMatrix& matrix() const noexcept { return m_; }

    HVector apply(const HVector& x) const;

    // Symplectic inverse -j m^T j: exact, integral, no elimination involved.
    SpElement inverse() const;

    bool operator==(const SpElement& other) const { return m_ == other.m_; }
    bool operator!=(const SpElement& other) const { return !(*this == other); }

private:
    std::size_t g_;
    IntMatrix m_;
};

SpElement operator*(const SpElement& a, const SpElement& b);

// Transvection along a: x -> x + (x . a) a.  As a matrix, 1 - a a^T j.
// Symplectic for every a (not only primitive a).
SpElement transvection(const SymplecticContext& ctx, const HVector& a);

// The handle-mixing map used to pull the base Seifert form around: it fixes
// every handle except p and q (1-based, p < q), where
//   A_p -> A_p + A_q + B_q,   B_p -> A_p + B_p,
//   A_q -> A_q + A_p + B_p,   B_q -> A_q + B_q.
SpElement psi_pq(const SymplecticContext& ctx, std::size_t p, std::size_t q);

// x = n * a with n >= 1 and a primitive (coordinate gcd 1).  The sign stays
// on a.  Throws invalid_input_error for the zero vector.
struct PrimitivePart {
    Integer multiplier;
    HVector primitive;
};

PrimitivePart primitive_part(const HVector& x);

bool is_primitive(const HVector& x);

} // namespace kgc

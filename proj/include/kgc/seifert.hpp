#pragma once

#include "kgc/symplectic.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kgc {

// Bilinear form l(x, y) = x^T m y refining the alternating pairing:
// m^T - m = j exactly.  Construction checks the refinement identity and
// throws invalid_input_error if it fails; pullback preserves it because
// the pulling matrix is symplectic.
class SeifertForm {
public:
    SeifertForm(const SymplecticContext& ctx, IntMatrix m);

    std::size_t genus() const noexcept { return g_; }
    const IntMatrix& matrix() const noexcept { return m_; }

    Integer operator()(const HVector& x, const HVector& y) const;

    bool operator==(const SeifertForm& other) const { return m_ == other.m_; }

private:
    std::size_t g_;
    IntMatrix m_;
};

// The form every computation starts from: l(B_i, A_i) = 1 and every other
// basis pair evaluates to 0.
SeifertForm base_seifert(const SymplecticContext& ctx);

// l'(x, y) = l(psi x, psi y).
SeifertForm pullback(const SeifertForm& l, const SpElement& psi);

// Homology data of a twist about a separating curve: the subsurface it cuts
// off has genus sub_genus, and pairs[s] = (a_s, b_s) is a symplectic basis
// of that subsurface's summand.  Construction checks, eagerly:
//   a_s . a_t = 0,  b_s . b_t = 0,  a_s . b_t = (s == t),
// and that the 2*sub_genus vectors span a direct summand (all elementary
// divisors 1), throwing invalid_input_error on any violation.
class SeparatingTwistSpec {
public:
    SeparatingTwistSpec(const SymplecticContext& ctx,
                        std::vector<std::pair<HVector, HVector>> pairs);

    std::size_t genus() const noexcept { return g_; }
    std::size_t sub_genus() const noexcept { return pairs_.size(); }
    const std::vector<std::pair<HVector, HVector>>& pairs() const noexcept { return pairs_; }

    // The 2*sub_genus vectors a_1, b_1, ..., stacked as rows.
    IntMatrix stacked() const;

private:
    std::size_t g_;
    std::vector<std::pair<HVector, HVector>> pairs_;
};

// Twist about the curve cutting off handle i alone (1-based): the summand is
// span{A_i, B_i}.
SeparatingTwistSpec delta_spec(const SymplecticContext& ctx, std::size_t i);

// Twist about the curve cutting off handles 1..i together (2 <= i <= g-2,
// so g >= 4): the summand is span{A_1, B_1, ..., A_i, B_i}.
SeparatingTwistSpec epsilon_spec(const SymplecticContext& ctx, std::size_t i);

// The twist invariant
//   lambda = sum_{s,t} ( l(a_s,a_t) l(b_s,b_t) - l(a_s,b_t) l(b_s,a_t) ),
// evaluated through the Gram matrix of the spec's vectors under l.  Basis
// invariance (any symplectic basis of the same summand gives the same value)
// is a checked property, not an assumption.
Integer morita_lambda(const SeifertForm& l, const SeparatingTwistSpec& spec);

// Same sum split as  diagonal + 2 * sum_{s<t} ( l(a_s,a_t) l(b_s,b_t)
// - l(a_s,b_t) l(a_t,b_s) ): equal to morita_lambda on every valid input
// because the spec's vectors pair symplectically.  Kept as an independent
// evaluation path for cross-checking.
Integer morita_lambda_split(const SeifertForm& l, const SeparatingTwistSpec& spec);

// End-to-end table of the cocycle lambda_{p,q} (1 <= p < q <= g) on the
// standard twists: entry delta[i-1] is its value on the twist about
// delta_i, epsilon[i-2] on the twist about epsilon_i.  The cocycle is
// evaluated as morita_lambda of the base form pulled back along psi_pq --
// nothing here is a stored table.
struct LambdaTable {
    std::size_t g = 0, p = 0, q = 0;
    std::vector<Integer> delta;   // size g
    std::vector<Integer> epsilon; // size g-3 for g >= 4, else empty
};

LambdaTable lambda_pq_table(const SymplecticContext& ctx, std::size_t p, std::size_t q);

} // namespace kgc

#pragma once

#include "kgc/splitting.hpp"

#include <cstddef>
#include <vector>

namespace kgc {

// Finding an x whose summand components tell a finite family of splittings
// apart, and verifying the separation property literally.

// The g projections of a splitting, in canonical summand order: proj[i] maps
// onto summand i+1 along the others.  Built as b e_i b^{-1} from the stacked
// summand bases b (unimodular, so the inverse is integral and exact).
std::vector<IntMatrix> projections(const SymplecticContext& ctx, const Splitting& s);

// Smallest canonical position i (1-based) such that summand i of s differs,
// as a lattice, from every summand of t.  Exists iff s != t; for s == t
// throws exhaustion_error (found = 0).
std::size_t distinguishing_index(const SymplecticContext& ctx, const Splitting& s,
                                 const Splitting& t);

// A finite family of splittings to separate.  find_generic_x requires the
// members pairwise distinct; duplicates surface as the exhaustion error
// propagated from distinguishing_index.
struct WitnessProblem {
    std::size_t g = 0;
    std::vector<Splitting> splittings;
};

// One component cell of the witness: x_{s,i} = proj_{s,i} x, its positive
// multiplier n and primitive part a (x_{s,i} = n * a).
struct WitnessComponent {
    HVector component;
    Integer multiplier;
    HVector primitive;
};

struct WitnessResult {
    HVector x;
    // grid[s][i]: component of x in summand i+1 of splitting s.
    std::vector<std::vector<WitnessComponent>> grid;
    // index[s][q] (s < q): the distinguishing summand position used for the
    // pair (s, q); 0 on and below the diagonal.
    std::vector<std::vector<std::size_t>> index;
};

// Deterministic search for a witness: enumerate integer points by growing
// max-coordinate shells (shell m holds the x with max |coordinate| = m),
// lexicographically within a shell, and return the first x satisfying both
// genericity conditions of the separation argument:
//   (a) every component proj_{s,i} x is nonzero, and
//   (b) for every pair s < q with distinguishing position i* = index[s][q],
//       (proj_{s,i*} - proj_{q,j}) x != 0 for every j.
// Throws exhaustion_error if no witness appears up to max_shell (found
// carries the number of candidates tested), and propagates the
// distinguishing-index error if the family has duplicates.
WitnessResult find_generic_x(const SymplecticContext& ctx, const WitnessProblem& problem,
                             std::size_t max_shell = 32);

// The literal separation property, checked independently of how x was
// found: all components nonzero, and for every pair s < q the multiset of
// components of x across the summands of splitting s differs from the
// multiset across splitting q.
bool verify_generic(const SymplecticContext& ctx, const HVector& x,
                    const WitnessProblem& problem);

} // namespace kgc

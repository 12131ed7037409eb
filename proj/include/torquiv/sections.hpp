#pragma once

#include <string>
#include <vector>

#include "torquiv/variety.hpp"

namespace torquiv {

// A Cox-ring monomial, stored as its exponent vector (one entry per ray,
// all nonnegative).
using Monomial = IntVec;

// Canonical monomial order: higher total degree first; ties broken by
// graded reverse lexicographic comparison, so x_0x_1 precedes x_3x_4. This
// is the order used for basis listings and arrow indexing everywhere.
bool monomial_before(const Monomial& a, const Monomial& b);

// "x_0x_1", "x_2^3x_5", constants print as "1".
std::string monomial_string(const Monomial& m);

// Monomial basis of the sections of the class d: all a >= 0 with
// deg(a) = d, enumerated through the lattice points of the character-space
// polytope of a lift, in canonical order. Empty when no section exists.
// Throws NotCompleteError if the fiber polytope is unbounded.
std::vector<Monomial> hom_basis(const ToricVariety& x, const IntVec& cls);

long hom_dimension(const ToricVariety& x, const IntVec& cls);

}  // namespace torquiv

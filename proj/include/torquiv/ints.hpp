#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace torquiv {

// All lattice arithmetic is exact. Int is an arbitrary-precision integer,
// Rat an arbitrary-precision rational; no floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scaled(const IntVec& a, const Int& c);
Int vec_dot(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& a);

// gcd of all entries, nonnegative; 0 for the zero vector
Int vec_content(const IntVec& a);

// "{a, b, c}"
std::string vec_string(const IntVec& a);

}  // namespace torquiv

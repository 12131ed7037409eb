#pragma once

#include <map>

#include "torquiv/quiver.hpp"
#include "torquiv/variety.hpp"

namespace torquiv {

// Complex on the vertex set I whose faces are the intersections of I with
// the cones of the fan.
SimplicialComplex induced_complex(const Fan& fan, std::vector<int> rays_subset);

// Ranks of reduced simplicial homology over Q, degrees -1..dim; zero ranks
// are omitted. The empty complex has rank 1 in degree -1.
std::map<int, long> reduced_homology_ranks(const SimplicialComplex& k);

// All ray subsets with nontrivial reduced homology, enumerated by size then
// lexicographically; cached on the variety.
const std::vector<ForbiddenSet>& forbidden_sets(const ToricVariety& x);

// View keyed by cohomological degree.
std::map<int, std::vector<std::vector<int>>> forbidden_sets_by_degree(const ToricVariety& x);

// Exact membership of a class in the non-vanishing region attached to a
// forbidden set: some character and lift realize negativity exactly on I.
// Throws UnboundedRegionError if the search region is unbounded.
bool nonvanishing_region_contains(const ToricVariety& x, const ForbiddenSet& fs,
                                  const IntVec& cls);

// Halfspace description {v : H v <= w} of the projected raw cone of I,
// obtained by eliminating the character directions; cached on the variety.
const ConeRegion& projected_cone(const ToricVariety& x, const std::vector<int>& rays_subset);

// H^i vanishes for every i >= 1.
bool higher_cohomology_vanishes(const ToricVariety& x, const IntVec& cls);

// Strong exceptionality of the quiver's vertex classes (all ordered pairs).
bool do_higher_self_exts_vanish(const QuiverOfSections& q);

// Twisted variant: differences shifted by 0..p times the anticanonical class.
bool do_higher_self_exts_vanish(const QuiverOfSections& q, int p);

bool classes_strong_exceptional(const ToricVariety& x, const std::vector<IntVec>& classes,
                                int p);

// Exact dimensions h^0..h^n of the cohomology of O(D), computed degreewise
// from the homology of negative-support complexes.
IntVec cohomology_oracle(const ToricVariety& x, const IntVec& divisor);

}  // namespace torquiv

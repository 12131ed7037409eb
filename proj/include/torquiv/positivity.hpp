#pragma once

#include "torquiv/quiver.hpp"
#include "torquiv/variety.hpp"

namespace torquiv {

// Codimension-1 cones with their curve relations; requires a smooth
// (hence simplicial) complete variety. Cached on the variety.
const std::vector<Wall>& walls(const ToricVariety& x);

// D . V(wall) via the wall relation; depends only on the class of D.
Int intersection_number(const ToricVariety& x, const IntVec& divisor, const Wall& w);

// Nonnegative against every torus-invariant curve.
bool is_nef(const ToricVariety& x, const IntVec& cls);

// L_i (x) L_j^{-1} (x) (-K)^n nef for every ordered vertex pair.
bool bundles_nef_check(const QuiverOfSections& q, long n);

}  // namespace torquiv

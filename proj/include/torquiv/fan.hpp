#pragma once

#include <utility>
#include <vector>

#include "torquiv/intmat.hpp"

namespace torquiv {

// Rays and maximal cones of a rational polyhedral fan. Ray order is
// significant: labels x_0, x_1, ... refer to it everywhere.
struct Fan {
    int dim = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;

    // Throws InvalidFanError: non-primitive or duplicate rays, bad indices,
    // rays not covered by any cone.
    void validate() const;

    // |rays| x dim matrix whose i-th row is ray i; as a map this is the
    // inclusion of the character lattice paired against the rays.
    IntMatrix ray_matrix() const;

    bool operator==(const Fan&) const = default;
};

// Facets of the cone spanned by the given rays, as pairs (inward normal,
// rays lying on the facet). Throws InvalidFanError if the cone is not
// strongly convex.
std::vector<std::pair<IntVec, std::vector<int>>> cone_facets(const Fan& fan,
                                                             const std::vector<int>& cone);

// Support covers R^n: every maximal cone full-dimensional, every facet shared
// by exactly two maximal cones, dual graph connected.
bool is_complete(const Fan& fan);

// Every maximal cone generated by part of a lattice basis.
bool is_smooth(const Fan& fan);

// Membership of a rational point in the cone spanned by the given rays.
bool cone_contains(const Fan& fan, const std::vector<int>& cone, const RatVec& x);

}  // namespace torquiv

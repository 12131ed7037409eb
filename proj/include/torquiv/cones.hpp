#pragma once

#include <map>
#include <vector>

#include "torquiv/intmat.hpp"

namespace torquiv {

// Abstract simplicial complex; vertex ids refer to ray indices of the fan it
// came from. Facets are the inclusion-maximal faces, each sorted ascending.
struct SimplicialComplex {
    std::vector<int> vertices;
    std::vector<std::vector<int>> facets;
};

// A subset of rays whose induced complex has nontrivial reduced homology.
// witnesses maps a cohomological degree i >= 1 to the rank of H~_{i-1}.
struct ForbiddenSet {
    std::vector<int> rays;
    std::map<int, long> witnesses;
};

// {v : h v <= w}: halfspace description of the projected raw cone of a
// forbidden set. Display/diagnostic form only; membership decisions are made
// by exact lattice-point search.
struct ConeRegion {
    std::vector<int> rays;
    IntVec w;
    IntMatrix h;
};

// Codimension-1 cone shared by two maximal cones, together with the integer
// relation  u_{off_a} + u_{off_b} + sum_i coeffs[i] * u_{rays[i]} = 0.
struct Wall {
    std::vector<int> rays;
    int cone_a = -1, cone_b = -1;
    int off_a = -1, off_b = -1;
    IntVec coeffs;
};

}  // namespace torquiv

#pragma once

#include <optional>
#include <vector>

#include "torquiv/intmat.hpp"

namespace torquiv {

// Closed halfspace {x : normal . x >= offset} over the rationals.
struct Halfspace {
    RatVec normal;
    Rat offset;
};

// Intersection of finitely many halfspaces in R^dim.
struct RationalPolytope {
    int dim = 0;
    std::vector<Halfspace> ineqs;
};

// Integer inequality system; each row is (c_0, ..., c_{n-1}, b) and means
// c . x >= b. Eliminated variables keep their column with coefficient 0.
struct IneqSystem {
    int nvars = 0;
    std::vector<IntVec> rows;

    explicit IneqSystem(int n = 0) : nvars(n) {}
    void add(IntVec coeffs, Int rhs);
};

// Fourier-Motzkin elimination of the listed variables. Exact over Q; rows
// are content-normalized and deduplicated at every step. Witnesses of
// infeasibility (0 >= positive) are kept.
IneqSystem fm_eliminate(IneqSystem sys, std::vector<int> vars);

bool fm_feasible(const IneqSystem& sys);

struct SupResult {
    enum Kind { Infeasible, Unbounded, Finite } kind = Infeasible;
    Rat value;
};

// Exact supremum of objective . x over the solution set.
SupResult fm_sup(const IneqSystem& sys, const IntVec& objective);

// Drops rows implied by the remaining ones (exact LP test via elimination).
// Deterministic: rows are examined in order and survivors keep input order.
IneqSystem prune_redundant(const IneqSystem& sys);

// All vertices (basic feasible points) of the system.
std::vector<RatVec> system_vertices(const IneqSystem& sys);

// True if the recession cone {w : C w >= 0} contains a nonzero vector.
bool has_recession_direction(const IneqSystem& sys);

// All integer points of a bounded polytope, sorted lexicographically.
// Throws UnboundedError when the feasible set has a recession direction.
std::vector<IntVec> lattice_points(const RationalPolytope& p);
std::vector<IntVec> lattice_points(const IneqSystem& sys);

std::vector<RatVec> polytope_vertices(const RationalPolytope& p);

// Clears denominators row by row.
IneqSystem to_integer_system(const RationalPolytope& p);

}  // namespace torquiv

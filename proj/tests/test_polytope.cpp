#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "torquiv/errors.hpp"
#include "torquiv/polytope.hpp"

using namespace torquiv;
using namespace torquiv::testing;

namespace {

RationalPolytope poly(int dim, std::initializer_list<std::pair<std::initializer_list<long>, long>> hs) {
    RationalPolytope p;
    p.dim = dim;
    for (const auto& [n, b] : hs) {
        Halfspace h;
        for (long x : n) h.normal.emplace_back(x);
        h.offset = b;
        p.ineqs.push_back(std::move(h));
    }
    return p;
}

}  // namespace

TEST_CASE("lattice points of the unit square") {
    const auto p = poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -1}, {{0, -1}, -1}});
    const auto pts = lattice_points(p);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == iv({0, 0}));
    CHECK(pts[3] == iv({1, 1}));
}

TEST_CASE("lattice points of a simplex") {
    const auto p = poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -2}});
    CHECK(lattice_points(p).size() == 6);
}

TEST_CASE("empty polytopes") {
    CHECK(lattice_points(poly(1, {{{1}, 1}, {{-1}, 0}})).empty());
    // rational sliver with no integer points
    const auto thin = poly(2, {{{3, 0}, 1}, {{-3, 0}, -2}, {{0, 1}, 0}, {{0, -1}, -1}});
    CHECK(lattice_points(thin).empty());
}

TEST_CASE("unbounded polytope raises") {
    CHECK_THROWS_AS(lattice_points(poly(2, {{{1, 0}, 0}, {{0, 1}, 0}})), UnboundedError);
    // half-strip: has vertices but still unbounded
    CHECK_THROWS_AS(lattice_points(poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}})),
                    UnboundedError);
}

TEST_CASE("vertices of a thin polytope") {
    const auto p = poly(2, {{{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}});
    auto v = system_vertices(to_integer_system(p));
    CHECK(v.size() == 2);
}

TEST_CASE("lattice point count is invariant under unimodular maps") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> off(-4, 4);
    // random small simplices, sheared by a unimodular map
    for (int t = 0; t < 40; ++t) {
        const long a = off(rng), b = off(rng);
        const auto p = poly(2, {{{1, 0}, a}, {{0, 1}, b}, {{-1, -1}, -(a + b + 3)}});
        // shear (x,y) -> (x+y, y): transform normals by the inverse transpose
        const auto q = poly(2, {{{1, -1}, a}, {{0, 1}, b}, {{-1, 0}, -(a + b + 3)}});
        CHECK(lattice_points(p).size() == lattice_points(q).size());
    }
}

TEST_CASE("fourier-motzkin projection and sup") {
    // triangle x >= 0, y >= 0, x + y <= 3 projected to x: [0, 3]
    IneqSystem s(2);
    s.add(iv({1, 0}), 0);
    s.add(iv({0, 1}), 0);
    s.add(iv({-1, -1}), -3);
    const auto proj = fm_eliminate(s, {1});
    for (const auto& r : proj.rows) CHECK(r[1] == 0);

    const auto sup = fm_sup(s, iv({1, 0}));
    CHECK(sup.kind == SupResult::Finite);
    CHECK(sup.value == Rat(3));

    const auto unb = fm_sup(s, iv({-1, 0}));
    CHECK(unb.kind == SupResult::Finite);
    CHECK(unb.value == Rat(0));

    IneqSystem cone(2);
    cone.add(iv({1, 0}), 0);
    CHECK(fm_sup(cone, iv({1, 0})).kind == SupResult::Unbounded);

    IneqSystem bad(1);
    bad.add(iv({1}), 1);
    bad.add(iv({-1}), 0);
    CHECK_FALSE(fm_feasible(bad));
    CHECK(fm_sup(bad, iv({1})).kind == SupResult::Infeasible);
}

TEST_CASE("redundancy pruning") {
    IneqSystem s(2);
    s.add(iv({1, 0}), 0);
    s.add(iv({0, 1}), 0);
    s.add(iv({1, 1}), 0);   // implied by the first two
    s.add(iv({2, 0}), -1);  // implied by x >= 0
    const auto pruned = prune_redundant(s);
    CHECK(pruned.rows.size() == 2);
}

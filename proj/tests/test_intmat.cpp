#include "doctest.h"
#include "support.hpp"
#include "torquiv/intmat.hpp"

using namespace torquiv;
using namespace torquiv::testing;

TEST_CASE("smith normal form of identity") {
    const auto a = IntMatrix::identity(2);
    const auto s = smith_normal_form(a);
    CHECK(s.d == a);
    CHECK(s.p == a);
    CHECK(s.q == a);
}

TEST_CASE("smith normal form small examples") {
    const auto a = im({{2, 4}, {6, 8}});
    const auto s = smith_normal_form(a);
    CHECK(smith_checks_out(a, s));
    CHECK(s.diagonal() == iv({2, 4}));

    const auto z = IntMatrix(2, 3);
    const auto sz = smith_normal_form(z);
    CHECK(smith_checks_out(z, sz));
    CHECK(sz.d.is_zero());
}

TEST_CASE("smith normal form randomized reassembly") {
    std::mt19937 rng(20240517);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_matrix(rng, 6, 12);
        const auto s = smith_normal_form(a);
        CHECK(smith_checks_out(a, s));
    }
}

TEST_CASE("determinant agrees with invariant factor product") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> dim(1, 5);
        std::uniform_int_distribution<long> entry(-8, 8);
        const int n = dim(rng);
        IntMatrix a(n, n);
        for (auto& x : a.data) x = entry(rng);
        Int prod = 1;
        for (const auto& d : smith_normal_form(a).diagonal()) prod *= d;
        CHECK(abs(determinant(a)) == prod);
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(IntMatrix::identity(3)).cols == 0);

    const auto a = im({{1, 1, 1}});
    const auto k = kernel_basis(a);
    CHECK(k.cols == 2);
    CHECK(mat_mul(a, k).is_zero());
    // saturated: all invariant factors of the basis are 1
    for (const auto& f : smith_normal_form(k).invariant_factors()) CHECK(f == 1);

    // rays of a complete surface fan span, so the inclusion has no kernel
    const auto hex = im({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    CHECK(kernel_basis(hex.transpose()).cols == 0);
    CHECK(kernel_basis(hex).cols == 6 - 2);
}

TEST_CASE("cokernel projection") {
    const auto p2 = im({{1, 0}, {0, 1}, {-1, -1}});
    const auto c = cokernel_projection(p2);
    CHECK(c.rank == 1);
    CHECK(c.torsion.empty());
    CHECK(c.proj == im({{1, 1, 1}}));

    const auto hex = im({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    const auto ch = cokernel_projection(hex);
    CHECK(ch.rank == 4);
    CHECK(ch.torsion.empty());
    CHECK(mat_mul(ch.proj, hex).is_zero());

    const auto z = cokernel_projection(IntMatrix(2, 2));
    CHECK(z.rank == 2);
    CHECK(z.proj == IntMatrix::identity(2));

    // torsion: Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 -> invariant factor 6
    const auto t = cokernel_projection(im({{2, 0}, {0, 3}}));
    CHECK(t.rank == 0);
    CHECK(t.torsion == iv({6}));
}

TEST_CASE("cokernel projection properties") {
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_matrix(rng, 5, 6);
        const auto c = cokernel_projection(a);
        CHECK(mat_mul(c.proj, a).is_zero());
        // surjectivity: all invariant factors 1
        const auto inv = smith_normal_form(c.proj).invariant_factors();
        CHECK(static_cast<int>(inv.size()) == c.rank);
        for (const auto& f : inv) CHECK(f == 1);
    }
}

TEST_CASE("solve_integer") {
    CHECK(solve_integer(IntMatrix::identity(2), iv({3, 5})) == iv({3, 5}));

    const auto a = im({{1, 1, 1}});
    const auto x = solve_integer(a, iv({2}));
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == iv({2}));

    CHECK_FALSE(solve_integer(im({{2}}), iv({1})).has_value());
    CHECK_FALSE(solve_integer(im({{1, 0}, {1, 0}}), iv({0, 1})).has_value());
}

TEST_CASE("solve_integer randomized") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_matrix(rng, 5, 9);
        IntVec x0(a.cols);
        for (auto& v : x0) v = entry(rng);
        const IntVec b = a.apply(x0);
        const auto x = solve_integer(a, b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
    }
}

#pragma once

#include <optional>

#include "torquiv/ints.hpp"

namespace torquiv {

// Dense matrix over Int, row-major. Values are immutable in spirit: every
// operation returns a fresh matrix.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    IntVec data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rws);

    Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    IntVec row(int i) const;
    IntVec col(int j) const;
    IntMatrix transpose() const;
    IntVec apply(const IntVec& v) const;  // this * v
    bool is_zero() const;

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// P * A * Q = D with P, Q unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithDecomposition {
    IntMatrix d;
    IntMatrix p;
    IntMatrix q;

    IntVec diagonal() const;
    // nonzero diagonal entries
    IntVec invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

int mat_rank(const IntMatrix& a);

// Bareiss fraction-free determinant; a must be square.
Int determinant(const IntMatrix& a);

// Columns form a basis of the saturated kernel {v : Av = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Presentation of Z^rows / image(A). proj has `rank` rows and A.rows columns;
// it is surjective, kills image(A), and its kernel is the saturation of
// image(A). Rows are sign-normalized (first nonzero entry positive) so the
// basis is reproducible.
struct CokernelProjection {
    int rank = 0;
    IntVec torsion;  // invariant factors > 1
    IntMatrix proj;
};

CokernelProjection cokernel_projection(const IntMatrix& a);

// Some integer solution of A x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

}  // namespace torquiv

#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "torquiv/intmat.hpp"

namespace torquiv::testing {

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> r;
    for (const auto& row : rows) r.push_back(iv(row));
    return IntMatrix::from_rows(r);
}

inline IntMatrix random_matrix(std::mt19937& rng, int max_dim, long max_abs) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-max_abs, max_abs);
    IntMatrix a(dim(rng), dim(rng));
    for (auto& x : a.data) x = entry(rng);
    return a;
}

// P*A*Q = D, diagonal, nonnegative, divisibility chain, unimodular P and Q.
inline bool smith_checks_out(const IntMatrix& a, const SmithDecomposition& s) {
    if (mat_mul(mat_mul(s.p, a), s.q) != s.d) return false;
    for (int i = 0; i < s.d.rows; ++i)
        for (int j = 0; j < s.d.cols; ++j)
            if (i != j && s.d.at(i, j) != 0) return false;
    const IntVec diag = s.diagonal();
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (diag[i] == 0 && diag[i + 1] != 0) return false;
        if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
    const Int dp = determinant(s.p), dq = determinant(s.q);
    return (dp == 1 || dp == -1) && (dq == 1 || dq == -1);
}

}  // namespace torquiv::testing

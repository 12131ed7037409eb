#include "torquiv/intmat.hpp"

#include <algorithm>

#include "torquiv/errors.hpp"

namespace torquiv {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rws) {
    const int r = static_cast<int>(rws.size());
    const int c = r ? static_cast<int>(rws[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rws[i].size()) != c)
            throw LengthMismatchError("ragged row lengths in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
}

IntVec IntMatrix::row(int i) const {
    IntVec out(cols);
    for (int j = 0; j < cols; ++j) out[j] = at(i, j);
    return out;
}

IntVec IntMatrix::col(int j) const {
    IntVec out(rows);
    for (int i = 0; i < rows; ++i) out[i] = at(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw LengthMismatchError("matrix-vector size mismatch");
    IntVec out(rows);
    for (int i = 0; i < rows; ++i) {
        Int s = 0;
        for (int j = 0; j < cols; ++j) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Int& x) { return x == 0; });
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw LengthMismatchError("matrix product size mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntVec SmithDecomposition::diagonal() const {
    const int k = std::min(d.rows, d.cols);
    IntVec out(k);
    for (int i = 0; i < k; ++i) out[i] = d.at(i, i);
    return out;
}

IntVec SmithDecomposition::invariant_factors() const {
    IntVec out;
    for (const auto& x : diagonal())
        if (x != 0) out.push_back(x);
    return out;
}

namespace {

// In-place Smith reduction machinery. Row operations update p, column
// operations update q, maintaining p*orig*q = a throughout.
struct SmithWork {
    IntMatrix a, p, q;

    explicit SmithWork(const IntMatrix& in)
        : a(in), p(IntMatrix::identity(in.rows)), q(IntMatrix::identity(in.cols)) {}

    void row_op(int i, int j, const Int& f) {  // row i -= f * row j
        for (int k = 0; k < a.cols; ++k) a.at(i, k) -= f * a.at(j, k);
        for (int k = 0; k < p.cols; ++k) p.at(i, k) -= f * p.at(j, k);
    }
    void col_op(int i, int j, const Int& f) {  // col i -= f * col j
        for (int k = 0; k < a.rows; ++k) a.at(k, i) -= f * a.at(k, j);
        for (int k = 0; k < q.rows; ++k) q.at(k, i) -= f * q.at(k, j);
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < a.cols; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (int k = 0; k < p.cols; ++k) std::swap(p.at(i, k), p.at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < a.rows; ++k) std::swap(a.at(k, i), a.at(k, j));
        for (int k = 0; k < q.rows; ++k) std::swap(q.at(k, i), q.at(k, j));
    }
    void negate_row(int i) {
        for (int k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
        for (int k = 0; k < p.cols; ++k) p.at(i, k) = -p.at(i, k);
    }

    // Deterministic pivot: min |a_ij| over nonzero entries, ties broken by
    // (i, j) lexicographic, so repeated runs give identical bases.
    void diagonalize() {
        const int lim = std::min(a.rows, a.cols);
        for (int t = 0; t < lim; ++t) {
            int bi = -1, bj = -1;
            for (int i = t; i < a.rows; ++i)
                for (int j = t; j < a.cols; ++j) {
                    if (a.at(i, j) == 0) continue;
                    if (bi < 0 || abs(a.at(i, j)) < abs(a.at(bi, bj))) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) return;  // all zero below (t,t)
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool again = true;
            while (again) {
                again = false;
                for (int i = t + 1; i < a.rows; ++i) {
                    if (a.at(i, t) == 0) continue;
                    row_op(i, t, a.at(i, t) / a.at(t, t));
                    if (a.at(i, t) != 0) {
                        swap_rows(t, i);
                        again = true;
                    }
                }
                for (int j = t + 1; j < a.cols; ++j) {
                    if (a.at(t, j) == 0) continue;
                    col_op(j, t, a.at(t, j) / a.at(t, t));
                    if (a.at(t, j) != 0) {
                        swap_cols(t, j);
                        again = true;
                    }
                }
            }
        }
    }

    void run() {
        diagonalize();
        const int lim = std::min(a.rows, a.cols);
        // enforce the divisibility chain by folding offending pairs back in
        while (true) {
            int bad = -1;
            for (int i = 0; i + 1 < lim; ++i) {
                const Int& x = a.at(i, i);
                const Int& y = a.at(i + 1, i + 1);
                if ((x == 0 && y != 0) || (x != 0 && y % x != 0)) {
                    bad = i;
                    break;
                }
            }
            if (bad < 0) break;
            col_op(bad, bad + 1, Int(-1));  // col bad += col bad+1
            diagonalize();
        }
        for (int i = 0; i < lim; ++i)
            if (a.at(i, i) < 0) negate_row(i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithWork w(a);
    w.run();
    return SmithDecomposition{std::move(w.a), std::move(w.p), std::move(w.q)};
}

int mat_rank(const IntMatrix& a) {
    return static_cast<int>(smith_normal_form(a).invariant_factors().size());
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw LengthMismatchError("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = v / prev;  // Bareiss: division is exact
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    if (a.rows == 0) return IntMatrix::identity(a.cols);
    const auto s = smith_normal_form(a);
    const int r = static_cast<int>(s.invariant_factors().size());
    IntMatrix k(a.cols, a.cols - r);
    for (int i = 0; i < a.cols; ++i)
        for (int j = r; j < a.cols; ++j) k.at(i, j - r) = s.q.at(i, j);
    return k;
}

CokernelProjection cokernel_projection(const IntMatrix& a) {
    const auto s = smith_normal_form(a);
    const auto diag = s.diagonal();
    CokernelProjection out;
    for (const auto& d : diag)
        if (d > 1) out.torsion.push_back(d);
    std::vector<int> free_rows;
    for (int i = 0; i < a.rows; ++i)
        if (i >= static_cast<int>(diag.size()) || diag[i] == 0) free_rows.push_back(i);
    out.rank = static_cast<int>(free_rows.size());
    out.proj = IntMatrix(out.rank, a.rows);
    for (int i = 0; i < out.rank; ++i) {
        IntVec r = s.p.row(free_rows[i]);
        for (const auto& x : r) {
            if (x == 0) continue;
            if (x < 0) r = vec_neg(r);
            break;
        }
        for (int j = 0; j < a.rows; ++j) out.proj.at(i, j) = r[j];
    }
    return out;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw LengthMismatchError("solve_integer: rhs length mismatch");
    const auto s = smith_normal_form(a);
    const IntVec pb = s.p.apply(b);
    const int k = std::min(a.rows, a.cols);
    IntVec y(a.cols);
    for (int i = 0; i < a.rows; ++i) {
        const Int d = i < k ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (pb[i] != 0) return std::nullopt;
        } else {
            if (pb[i] % d != 0) return std::nullopt;
            y[i] = pb[i] / d;
        }
    }
    return s.q.apply(y);
}

}  // namespace torquiv

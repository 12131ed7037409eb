#include "torquiv/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torquiv/errors.hpp"

namespace torquiv {

namespace {

IntVec normalize_row(IntVec r) {
    Int g = 0;
    for (const auto& x : r) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : r) x /= g;
    return r;
}

// 0 >= b with b > 0: infeasible witness. 0 >= b with b <= 0: trivial.
bool is_trivial(const IntVec& r) {
    for (size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i] != 0) return false;
    return r.back() <= 0;
}

bool is_infeasible_row(const IntVec& r) {
    for (size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i] != 0) return false;
    return r.back() > 0;
}

void dedupe(std::vector<IntVec>& rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Gaussian elimination over Q. Returns solution of square system, if unique.
std::optional<RatVec> solve_square(const std::vector<RatVec>& m, const RatVec& b) {
    const int n = static_cast<int>(b.size());
    std::vector<RatVec> aug(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n] = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (aug[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(aug[c], aug[piv]);
        const Rat pv = aug[c][c];
        for (auto& x : aug[c]) x /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            const Rat f = aug[r][c];
            for (int j = c; j <= n; ++j) aug[r][j] -= f * aug[c][j];
        }
    }
    RatVec out(n);
    for (int i = 0; i < n; ++i) out[i] = aug[i][n];
    return out;
}

Rat row_eval(const IntVec& row, const RatVec& x) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += Rat(row[i]) * x[i];
    return s;
}

}  // namespace

void IneqSystem::add(IntVec coeffs, Int rhs) {
    if (static_cast<int>(coeffs.size()) != nvars)
        throw LengthMismatchError("inequality width mismatch");
    coeffs.push_back(std::move(rhs));
    rows.push_back(normalize_row(std::move(coeffs)));
}

IneqSystem fm_eliminate(IneqSystem sys, std::vector<int> vars) {
    for (int v : vars) {
        std::vector<IntVec> zero, pos, neg;
        for (auto& r : sys.rows) {
            if (r[v] == 0)
                zero.push_back(std::move(r));
            else if (r[v] > 0)
                pos.push_back(std::move(r));
            else
                neg.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // p[v] > 0 > n[v]; p[v]*n - n[v]*p has zero v-coefficient
                IntVec r(sys.nvars + 1);
                for (int k = 0; k <= sys.nvars; ++k) r[k] = p[v] * n[k] - n[v] * p[k];
                r = normalize_row(std::move(r));
                if (!is_trivial(r)) zero.push_back(std::move(r));
            }
        std::vector<IntVec> kept;
        for (auto& r : zero)
            if (!is_trivial(r)) kept.push_back(std::move(r));
        dedupe(kept);
        sys.rows = std::move(kept);
    }
    return sys;
}

bool fm_feasible(const IneqSystem& sys) {
    std::vector<int> all(sys.nvars);
    for (int i = 0; i < sys.nvars; ++i) all[i] = i;
    const IneqSystem out = fm_eliminate(sys, all);
    for (const auto& r : out.rows)
        if (is_infeasible_row(r)) return false;
    return true;
}

SupResult fm_sup(const IneqSystem& sys, const IntVec& objective) {
    if (static_cast<int>(objective.size()) != sys.nvars)
        throw LengthMismatchError("objective width mismatch");
    IneqSystem ext(sys.nvars + 1);
    for (const auto& r : sys.rows) {
        IntVec c(r.begin(), r.end() - 1);
        c.push_back(0);
        ext.add(std::move(c), r.back());
    }
    {
        IntVec c = vec_neg(objective);  // t - obj.x >= 0
        c.push_back(1);
        ext.add(std::move(c), 0);
        c = objective;  // obj.x - t >= 0
        c.push_back(-1);
        ext.add(std::move(c), 0);
    }
    std::vector<int> vars(sys.nvars);
    for (int i = 0; i < sys.nvars; ++i) vars[i] = i;
    const IneqSystem out = fm_eliminate(std::move(ext), vars);

    SupResult res;
    bool has_upper = false;
    for (const auto& r : out.rows) {
        if (is_infeasible_row(r)) return SupResult{SupResult::Infeasible, 0};
        const Int& a = r[sys.nvars];
        if (a < 0) {  // a*t >= b  =>  t <= b/a
            const Rat bound = Rat(r.back()) / Rat(a);
            if (!has_upper || bound < res.value) res.value = bound;
            has_upper = true;
        }
    }
    res.kind = has_upper ? SupResult::Finite : SupResult::Unbounded;
    return res;
}

IneqSystem prune_redundant(const IneqSystem& sys) {
    IneqSystem cur = sys;
    dedupe(cur.rows);
    for (size_t i = 0; i < cur.rows.size();) {
        IneqSystem rest(cur.nvars);
        for (size_t j = 0; j < cur.rows.size(); ++j)
            if (j != i) rest.rows.push_back(cur.rows[j]);
        // row: c.x >= b is implied iff inf c.x over the rest >= b,
        // i.e. sup (-c).x <= -b
        const IntVec& r = cur.rows[i];
        IntVec negc(cur.nvars);
        for (int k = 0; k < cur.nvars; ++k) negc[k] = -r[k];
        const SupResult s = fm_sup(rest, negc);
        const bool redundant = s.kind == SupResult::Infeasible ||
                               (s.kind == SupResult::Finite && s.value <= Rat(-r.back()));
        if (redundant)
            cur.rows.erase(cur.rows.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return cur;
}

std::vector<RatVec> system_vertices(const IneqSystem& sys) {
    const int n = sys.nvars;
    std::vector<RatVec> verts;
    if (n == 0) return verts;
    const int m = static_cast<int>(sys.rows.size());
    std::vector<int> idx(n);
    // iterate over all n-subsets of rows
    for (int i = 0; i < n; ++i) idx[i] = i;
    if (m < n) return verts;
    while (true) {
        std::vector<RatVec> mat(n, RatVec(n));
        RatVec rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) mat[i][j] = Rat(sys.rows[idx[i]][j]);
            rhs[i] = Rat(sys.rows[idx[i]].back());
        }
        if (auto x = solve_square(mat, rhs)) {
            bool ok = true;
            for (const auto& r : sys.rows)
                if (row_eval(r, *x) < Rat(r.back())) {
                    ok = false;
                    break;
                }
            if (ok && std::find(verts.begin(), verts.end(), *x) == verts.end())
                verts.push_back(std::move(*x));
        }
        int k = n - 1;
        while (k >= 0 && idx[k] == m - n + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return verts;
}

bool has_recession_direction(const IneqSystem& sys) {
    const int n = sys.nvars;
    if (n == 0) return false;
    // lineality space: kernel of the coefficient matrix
    IntMatrix coeff(static_cast<int>(sys.rows.size()), n);
    for (size_t i = 0; i < sys.rows.size(); ++i)
        for (int j = 0; j < n; ++j) coeff.at(static_cast<int>(i), j) = sys.rows[i][j];
    if (mat_rank(coeff) < n) return true;
    // extreme rays of the (pointed) recession cone lie on n-1 active rows
    const int m = static_cast<int>(sys.rows.size());
    std::vector<int> subset;
    std::vector<int> stack{0};
    auto test_kernel = [&](const std::vector<int>& rows) -> bool {
        IntMatrix a(static_cast<int>(rows.size()), n);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j) a.at(static_cast<int>(i), j) = sys.rows[rows[i]][j];
        const IntMatrix k = kernel_basis(a);
        if (k.cols != 1) return false;
        for (int sgn = 0; sgn < 2; ++sgn) {
            IntVec w = k.col(0);
            if (sgn) w = vec_neg(w);
            bool ok = true;
            for (const auto& r : sys.rows) {
                Int s = 0;
                for (int j = 0; j < n; ++j) s += r[j] * w[j];
                if (s < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    };
    if (n == 1) return test_kernel({});
    // all (n-1)-subsets
    std::vector<int> idx(n - 1);
    for (int i = 0; i < n - 1; ++i) idx[i] = i;
    if (m < n - 1) return test_kernel({});
    while (true) {
        if (test_kernel(idx)) return true;
        int k = n - 2;
        while (k >= 0 && idx[k] == m - (n - 1) + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

IneqSystem to_integer_system(const RationalPolytope& p) {
    IneqSystem sys(p.dim);
    for (const auto& h : p.ineqs) {
        if (static_cast<int>(h.normal.size()) != p.dim)
            throw LengthMismatchError("halfspace dimension mismatch");
        Int lcm = denominator(h.offset);
        for (const auto& x : h.normal)
            lcm = boost::multiprecision::lcm(lcm, denominator(x));
        IntVec c(p.dim);
        for (int j = 0; j < p.dim; ++j) c[j] = numerator(h.normal[j] * Rat(lcm));
        sys.add(std::move(c), Int(numerator(h.offset * Rat(lcm))));
    }
    return sys;
}

std::vector<IntVec> lattice_points(const IneqSystem& sys) {
    const int n = sys.nvars;
    if (n == 0) return {};
    if (!fm_feasible(sys)) return {};
    if (has_recession_direction(sys)) throw UnboundedError("polytope is unbounded");
    const auto verts = system_vertices(sys);
    if (verts.empty()) return {};  // cannot happen for a feasible bounded system
    IntVec lo(n), hi(n);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (int j = 0; j < n; ++j) {
        Rat mn = verts[0][j], mx = verts[0][j];
        for (const auto& v : verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        // ceil(mn), floor(mx)
        Int num = numerator(mn), den = denominator(mn);
        lo[j] = num >= 0 ? (num + den - 1) / den : -((-num) / den);
        num = numerator(mx);
        den = denominator(mx);
        hi[j] = num >= 0 ? num / den : -(((-num) + den - 1) / den);
        if (lo[j] > hi[j]) return {};
    }
    std::vector<IntVec> out;
    IntVec cur = lo;
    while (true) {
        bool ok = true;
        for (const auto& r : sys.rows) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += r[j] * cur[j];
            if (s < r.back()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[k] == hi[k]) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < n; ++j) cur[j] = lo[j];
    }
    return out;
}

std::vector<IntVec> lattice_points(const RationalPolytope& p) {
    return lattice_points(to_integer_system(p));
}

std::vector<RatVec> polytope_vertices(const RationalPolytope& p) {
    return system_vertices(to_integer_system(p));
}

}  // namespace torquiv

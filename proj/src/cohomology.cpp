#include "torquiv/cohomology.hpp"

#include <algorithm>
#include <set>

#include "torquiv/errors.hpp"
#include "torquiv/polytope.hpp"

namespace torquiv {

SimplicialComplex induced_complex(const Fan& fan, std::vector<int> rays_subset) {
    std::sort(rays_subset.begin(), rays_subset.end());
    const std::set<int> in(rays_subset.begin(), rays_subset.end());
    std::set<std::vector<int>> faces;
    for (const auto& cone : fan.max_cones) {
        std::vector<int> f;
        for (int r : cone)
            if (in.count(r)) f.push_back(r);
        std::sort(f.begin(), f.end());
        if (!f.empty()) faces.insert(std::move(f));
    }
    SimplicialComplex k;
    k.vertices = std::move(rays_subset);
    for (const auto& f : faces) {
        bool maximal = true;
        for (const auto& g : faces) {
            if (&g == &f || g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) k.facets.push_back(f);
    }
    return k;
}

namespace {

int rat_rank(std::vector<RatVec> m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        const Rat pv = m[rank][c];
        for (auto& x : m[rank]) x /= pv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rat f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::map<int, long> reduced_homology_ranks(const SimplicialComplex& k) {
    // close the facets under subsets; the empty face is always present
    std::set<std::vector<int>> faces;
    faces.insert({});
    for (const auto& f : k.facets) {
        const size_t sz = f.size();
        for (size_t mask = 1; mask < (1u << sz); ++mask) {
            std::vector<int> sub;
            for (size_t b = 0; b < sz; ++b)
                if (mask & (1u << b)) sub.push_back(f[b]);
            faces.insert(std::move(sub));
        }
    }
    int maxd = -1;
    std::map<int, std::vector<std::vector<int>>> by_dim;
    for (const auto& f : faces) {
        const int d = static_cast<int>(f.size()) - 1;
        by_dim[d].push_back(f);
        maxd = std::max(maxd, d);
    }
    // boundary rank in degree d: map C_d -> C_{d-1}
    std::map<int, int> bnd;
    for (int d = 0; d <= maxd; ++d) {
        const auto& cd = by_dim[d];
        const auto& cdm = by_dim[d - 1];
        std::map<std::vector<int>, int> idx;
        for (size_t i = 0; i < cdm.size(); ++i) idx[cdm[i]] = static_cast<int>(i);
        std::vector<RatVec> m(cdm.size(), RatVec(cd.size(), Rat(0)));
        for (size_t j = 0; j < cd.size(); ++j) {
            const auto& f = cd[j];
            int sign = 1;
            for (size_t t = 0; t < f.size(); ++t) {
                std::vector<int> sub;
                for (size_t s = 0; s < f.size(); ++s)
                    if (s != t) sub.push_back(f[s]);
                m[idx.at(sub)][j] = sign;
                sign = -sign;
            }
        }
        bnd[d] = rat_rank(std::move(m));
    }
    std::map<int, long> out;
    for (int d = -1; d <= maxd; ++d) {
        const long dim_cd = static_cast<long>(by_dim.count(d) ? by_dim[d].size() : 0);
        const long r = dim_cd - (bnd.count(d) ? bnd[d] : 0) - (bnd.count(d + 1) ? bnd[d + 1] : 0);
        if (r != 0) out[d] = r;
    }
    return out;
}

const std::vector<ForbiddenSet>& ToricVariety::forbidden_sets() const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (forbidden_) return *forbidden_;
    const int n = num_rays();
    if (n > 20) throw Error("subset enumeration over " + std::to_string(n) + " rays refused");
    std::vector<ForbiddenSet> out;
    // by size, then lexicographically
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) s.push_back(b);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (auto& s : subsets) {
        const auto ranks = reduced_homology_ranks(induced_complex(fan_, s));
        ForbiddenSet fs;
        for (const auto& [d, r] : ranks)
            if (d >= 0) fs.witnesses[d + 1] = r;
        if (fs.witnesses.empty()) continue;
        fs.rays = std::move(s);
        out.push_back(std::move(fs));
    }
    forbidden_ = std::move(out);
    return *forbidden_;
}

const std::vector<ForbiddenSet>& forbidden_sets(const ToricVariety& x) {
    return x.forbidden_sets();
}

std::map<int, std::vector<std::vector<int>>> forbidden_sets_by_degree(const ToricVariety& x) {
    std::map<int, std::vector<std::vector<int>>> out;
    for (const auto& fs : forbidden_sets(x))
        for (const auto& [i, r] : fs.witnesses) out[i].push_back(fs.rays);
    return out;
}

namespace {

// {m : <u_r, m> + D_r <= -1 for r in I, >= 0 otherwise}
IneqSystem negative_support_region(const ToricVariety& x, const std::vector<int>& rays_subset,
                                   const IntVec& divisor) {
    const std::set<int> in(rays_subset.begin(), rays_subset.end());
    IneqSystem sys(x.dim());
    for (int r = 0; r < x.num_rays(); ++r) {
        IntVec row(x.dim());
        for (int j = 0; j < x.dim(); ++j) row[j] = x.ray_matrix().at(r, j);
        if (in.count(r)) {
            sys.add(vec_neg(row), divisor[r] + 1);
        } else {
            sys.add(std::move(row), -divisor[r]);
        }
    }
    return sys;
}

long region_point_count(const ToricVariety& x, const std::vector<int>& rays_subset,
                        const IntVec& divisor) {
    try {
        return static_cast<long>(lattice_points(negative_support_region(x, rays_subset, divisor))
                                     .size());
    } catch (const UnboundedError&) {
        throw UnboundedRegionError("support region for rays " +
                                   [&] {
                                       std::string s;
                                       for (int r : rays_subset) s += std::to_string(r) + " ";
                                       return s;
                                   }() +
                                   "is unbounded");
    }
}

}  // namespace

bool nonvanishing_region_contains(const ToricVariety& x, const ForbiddenSet& fs,
                                  const IntVec& cls) {
    return region_point_count(x, fs.rays, x.lift(cls)) > 0;
}

const ConeRegion& ToricVariety::cone_region(const std::vector<int>& rays) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    const auto it = regions_.find(rays);
    if (it != regions_.end()) return it->second;

    const int r = cl_rank();
    const int n = dim();
    const int nr = num_rays();
    // integer right-inverse S of deg: a = S v + B m parametrizes the fiber
    IntMatrix s(nr, r);
    for (int c = 0; c < r; ++c) {
        IntVec e(r);
        e[c] = 1;
        const auto col = solve_integer(deg_, e);
        if (!col) throw NoLiftError("deg has no right inverse");
        for (int i = 0; i < nr; ++i) s.at(i, c) = (*col)[i];
    }
    const std::set<int> in(rays.begin(), rays.end());
    IneqSystem sys(r + n);
    for (int i = 0; i < nr; ++i) {
        IntVec row(r + n);
        for (int c = 0; c < r; ++c) row[c] = s.at(i, c);
        for (int j = 0; j < n; ++j) row[r + j] = rays_.at(i, j);
        if (in.count(i)) {
            sys.add(vec_neg(row), 1);  // -a_i >= 1
        } else {
            sys.add(std::move(row), 0);  // a_i >= 0
        }
    }
    std::vector<int> mvars(n);
    for (int j = 0; j < n; ++j) mvars[j] = r + j;
    IneqSystem vsys = fm_eliminate(std::move(sys), mvars);
    IneqSystem slim(r);
    for (const auto& row : vsys.rows) {
        IntVec c(row.begin(), row.begin() + r);
        slim.add(std::move(c), row.back());
    }
    slim = prune_redundant(slim);
    // rows c.v >= b become -c.v <= -b
    std::vector<std::pair<IntVec, Int>> rows;
    for (const auto& row : slim.rows) {
        IntVec h(r);
        for (int c = 0; c < r; ++c) h[c] = -row[c];
        rows.emplace_back(std::move(h), -row.back());
    }
    std::sort(rows.begin(), rows.end());
    ConeRegion region;
    region.rays = rays;
    region.h = IntMatrix(static_cast<int>(rows.size()), r);
    region.w.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int c = 0; c < r; ++c) region.h.at(static_cast<int>(i), c) = rows[i].first[c];
        region.w[i] = rows[i].second;
    }
    return regions_.emplace(rays, std::move(region)).first->second;
}

const ConeRegion& projected_cone(const ToricVariety& x, const std::vector<int>& rays_subset) {
    std::vector<int> sorted(rays_subset);
    std::sort(sorted.begin(), sorted.end());
    return x.cone_region(sorted);
}

bool higher_cohomology_vanishes(const ToricVariety& x, const IntVec& cls) {
    const IntVec d = x.lift(cls);
    for (const auto& fs : forbidden_sets(x))
        if (region_point_count(x, fs.rays, d) > 0) return false;
    return true;
}

bool classes_strong_exceptional(const ToricVariety& x, const std::vector<IntVec>& classes,
                                int p) {
    const IntVec minus_k = x.anticanonical_class();
    for (const auto& a : classes)
        for (const auto& b : classes)
            for (int m = 0; m <= p; ++m) {
                IntVec d = vec_sub(a, b);
                for (int t = 0; t < m; ++t) d = vec_add(d, minus_k);
                if (!higher_cohomology_vanishes(x, d)) return false;
            }
    return true;
}

bool do_higher_self_exts_vanish(const QuiverOfSections& q) {
    return classes_strong_exceptional(*q.variety(), q.vertices(), 0);
}

bool do_higher_self_exts_vanish(const QuiverOfSections& q, int p) {
    return classes_strong_exceptional(*q.variety(), q.vertices(), p);
}

IntVec cohomology_oracle(const ToricVariety& x, const IntVec& divisor) {
    if (static_cast<int>(divisor.size()) != x.num_rays())
        throw LengthMismatchError("divisor vector has wrong length");
    IntVec h(x.dim() + 1, Int(0));
    h[0] = region_point_count(x, {}, divisor);
    for (const auto& fs : forbidden_sets(x)) {
        const long count = region_point_count(x, fs.rays, divisor);
        if (count == 0) continue;
        for (const auto& [i, rank] : fs.witnesses)
            if (i <= x.dim()) h[i] += Int(rank) * count;
    }
    return h;
}

}  // namespace torquiv

#include "torquiv/positivity.hpp"

#include <algorithm>
#include <map>

#include "torquiv/errors.hpp"

namespace torquiv {

const std::vector<Wall>& ToricVariety::walls() const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (walls_) return *walls_;
    if (!is_smooth(fan_)) throw NotSmoothError("wall relations need a smooth fan");
    // smooth + complete: every maximal cone is simplicial full-dimensional,
    // so facets are the drop-one-ray subsets
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> shared;  // facet -> (cone, off)
    for (size_t ci = 0; ci < fan_.max_cones.size(); ++ci) {
        std::vector<int> cone(fan_.max_cones[ci]);
        std::sort(cone.begin(), cone.end());
        for (size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> facet;
            for (size_t t = 0; t < cone.size(); ++t)
                if (t != drop) facet.push_back(cone[t]);
            shared[facet].emplace_back(static_cast<int>(ci), cone[drop]);
        }
    }
    std::vector<Wall> out;
    for (const auto& [facet, owners] : shared) {
        if (owners.size() != 2)
            throw NotCompleteError("facet is not shared by exactly two maximal cones");
        Wall w;
        w.rays = facet;
        w.cone_a = owners[0].first;
        w.cone_b = owners[1].first;
        w.off_a = owners[0].second;
        w.off_b = owners[1].second;
        // u_a + u_b + sum c_i u_{facet_i} = 0
        IntMatrix m(dim(), static_cast<int>(facet.size()));
        for (int r = 0; r < dim(); ++r)
            for (size_t j = 0; j < facet.size(); ++j) m.at(r, static_cast<int>(j)) =
                fan_.rays[facet[j]][r];
        IntVec rhs(dim());
        for (int r = 0; r < dim(); ++r) rhs[r] = -(fan_.rays[w.off_a][r] + fan_.rays[w.off_b][r]);
        const auto sol = solve_integer(m, rhs);
        if (!sol) throw NotSmoothError("wall relation is not integral");
        w.coeffs = *sol;
        out.push_back(std::move(w));
    }
    walls_ = std::move(out);
    return *walls_;
}

const std::vector<Wall>& walls(const ToricVariety& x) { return x.walls(); }

Int intersection_number(const ToricVariety& x, const IntVec& divisor, const Wall& w) {
    if (static_cast<int>(divisor.size()) != x.num_rays())
        throw LengthMismatchError("divisor vector has wrong length");
    Int s = divisor[w.off_a] + divisor[w.off_b];
    for (size_t i = 0; i < w.rays.size(); ++i) s += w.coeffs[i] * divisor[w.rays[i]];
    return s;
}

bool is_nef(const ToricVariety& x, const IntVec& cls) {
    const IntVec d = x.lift(cls);
    for (const auto& w : walls(x))
        if (intersection_number(x, d, w) < 0) return false;
    return true;
}

bool bundles_nef_check(const QuiverOfSections& q, long n) {
    const ToricVariety& x = *q.variety();
    const IntVec minus_k = x.anticanonical_class();
    const IntVec twist = vec_scaled(minus_k, Int(n));
    for (const auto& a : q.vertices())
        for (const auto& b : q.vertices())
            if (!is_nef(x, vec_add(vec_sub(a, b), twist))) return false;
    return true;
}

}  // namespace torquiv

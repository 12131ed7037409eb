#include "torquiv/sections.hpp"

#include <algorithm>
#include <sstream>

#include "torquiv/errors.hpp"
#include "torquiv/polytope.hpp"

namespace torquiv {

bool monomial_before(const Monomial& a, const Monomial& b) {
    Int da = 0, db = 0;
    for (const auto& x : a) da += x;
    for (const auto& x : b) db += x;
    if (da != db) return da > db;
    // equal degree: a first iff the last nonzero entry of a - b is negative
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string monomial_string(const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        any = true;
        os << "x_" << i;
        if (m[i] > 1) os << "^" << m[i];
    }
    return any ? os.str() : "1";
}

std::vector<Monomial> hom_basis(const ToricVariety& x, const IntVec& cls) {
    IntVec lift;
    try {
        lift = x.lift(cls);
    } catch (const NoLiftError&) {
        return {};
    }
    const int n = x.dim();
    IneqSystem sys(n);
    for (int r = 0; r < x.num_rays(); ++r) {
        IntVec row(n);
        for (int j = 0; j < n; ++j) row[j] = x.ray_matrix().at(r, j);
        sys.add(std::move(row), -lift[r]);
    }
    std::vector<IntVec> points;
    try {
        points = lattice_points(sys);
    } catch (const UnboundedError&) {
        throw NotCompleteError("section polytope is unbounded; the fan cannot be complete");
    }
    std::vector<Monomial> out;
    out.reserve(points.size());
    for (const auto& m : points) {
        Monomial e(x.num_rays());
        for (int r = 0; r < x.num_rays(); ++r) {
            Int s = lift[r];
            for (int j = 0; j < n; ++j) s += x.ray_matrix().at(r, j) * m[j];
            e[r] = s;
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), monomial_before);
    return out;
}

long hom_dimension(const ToricVariety& x, const IntVec& cls) {
    return static_cast<long>(hom_basis(x, cls).size());
}

}  // namespace torquiv

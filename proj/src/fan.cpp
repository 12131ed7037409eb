#include "torquiv/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "torquiv/errors.hpp"
#include "torquiv/polytope.hpp"

namespace torquiv {

void Fan::validate() const {
    if (dim < 1) throw InvalidFanError("fan dimension must be at least 1");
    if (rays.empty()) throw InvalidFanError("fan has no rays");
    std::set<IntVec> seen;
    for (size_t i = 0; i < rays.size(); ++i) {
        const auto& u = rays[i];
        if (static_cast<int>(u.size()) != dim)
            throw InvalidFanError("ray " + std::to_string(i) + " has wrong dimension");
        if (vec_is_zero(u)) throw InvalidFanError("ray " + std::to_string(i) + " is zero");
        if (vec_content(u) != 1)
            throw InvalidFanError("ray " + std::to_string(i) + " is not primitive");
        if (!seen.insert(u).second)
            throw InvalidFanError("duplicate ray " + std::to_string(i));
    }
    if (max_cones.empty()) throw InvalidFanError("fan has no maximal cones");
    std::vector<bool> used(rays.size(), false);
    std::set<std::vector<int>> cone_seen;
    for (const auto& c : max_cones) {
        if (c.empty()) throw InvalidFanError("empty maximal cone");
        std::set<int> uniq;
        for (int r : c) {
            if (r < 0 || r >= static_cast<int>(rays.size()))
                throw InvalidFanError("cone references unknown ray " + std::to_string(r));
            if (!uniq.insert(r).second) throw InvalidFanError("cone repeats a ray");
            used[r] = true;
        }
        std::vector<int> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        if (!cone_seen.insert(sorted).second) throw InvalidFanError("duplicate maximal cone");
    }
    for (size_t i = 0; i < rays.size(); ++i)
        if (!used[i])
            throw InvalidFanError("ray " + std::to_string(i) + " lies in no maximal cone");
}

IntMatrix Fan::ray_matrix() const {
    IntMatrix m(static_cast<int>(rays.size()), dim);
    for (size_t i = 0; i < rays.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = rays[i][j];
    return m;
}

std::vector<std::pair<IntVec, std::vector<int>>> cone_facets(const Fan& fan,
                                                             const std::vector<int>& cone) {
    const int n = fan.dim;
    const int k = static_cast<int>(cone.size());
    // strongly convex: some functional is positive on every generator
    {
        IneqSystem strict(n);
        for (int r : cone) {
            IntVec c(fan.rays[r]);
            strict.add(std::move(c), 1);
        }
        if (!fm_feasible(strict)) throw InvalidFanError("maximal cone is not strongly convex");
    }
    // eliminate the multipliers t from {x = sum t_i u_i, t >= 0}
    IneqSystem sys(n + k);
    for (int i = 0; i < n; ++i) {
        IntVec row(n + k);
        row[i] = 1;
        for (int j = 0; j < k; ++j) row[n + j] = -fan.rays[cone[j]][i];
        IntVec neg = vec_neg(row);
        sys.add(std::move(row), 0);
        sys.add(std::move(neg), 0);
    }
    for (int j = 0; j < k; ++j) {
        IntVec row(n + k);
        row[n + j] = 1;
        sys.add(std::move(row), 0);
    }
    std::vector<int> tvars(k);
    for (int j = 0; j < k; ++j) tvars[j] = n + j;
    IneqSystem x_sys = fm_eliminate(std::move(sys), tvars);
    IneqSystem slim(n);
    for (const auto& r : x_sys.rows) {
        IntVec c(r.begin(), r.begin() + n);
        slim.add(std::move(c), r.back());
    }
    slim = prune_redundant(slim);
    std::vector<std::pair<IntVec, std::vector<int>>> facets;
    for (const auto& r : slim.rows) {
        const IntVec h(r.begin(), r.begin() + n);
        std::vector<int> on;
        for (int rr : cone)
            if (vec_dot(h, fan.rays[rr]) == 0) on.push_back(rr);
        std::sort(on.begin(), on.end());
        facets.emplace_back(h, std::move(on));
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

bool is_complete(const Fan& fan) {
    const int n = fan.dim;
    const int nc = static_cast<int>(fan.max_cones.size());
    // pure full-dimensional
    for (const auto& c : fan.max_cones) {
        IntMatrix m(static_cast<int>(c.size()), n);
        for (size_t i = 0; i < c.size(); ++i)
            for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = fan.rays[c[i]][j];
        if (mat_rank(m) != n) return false;
    }
    // every facet shared by exactly two maximal cones
    std::map<std::vector<int>, std::vector<int>> shared;
    for (int ci = 0; ci < nc; ++ci)
        for (auto& [h, on] : cone_facets(fan, fan.max_cones[ci])) shared[on].push_back(ci);
    std::vector<std::vector<int>> adj(nc);
    for (const auto& [key, cs] : shared) {
        if (cs.size() != 2) return false;
        adj[cs[0]].push_back(cs[1]);
        adj[cs[1]].push_back(cs[0]);
    }
    // connected dual graph
    std::vector<bool> vis(nc, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int count = 1;
    while (!q.empty()) {
        const int c = q.front();
        q.pop();
        for (int d : adj[c])
            if (!vis[d]) {
                vis[d] = true;
                ++count;
                q.push(d);
            }
    }
    return count == nc;
}

bool is_smooth(const Fan& fan) {
    for (const auto& c : fan.max_cones) {
        IntMatrix m(static_cast<int>(c.size()), fan.dim);
        for (size_t i = 0; i < c.size(); ++i)
            for (int j = 0; j < fan.dim; ++j) m.at(static_cast<int>(i), j) = fan.rays[c[i]][j];
        const auto inv = smith_normal_form(m).invariant_factors();
        if (static_cast<int>(inv.size()) != static_cast<int>(c.size())) return false;
        for (const auto& f : inv)
            if (f != 1) return false;
    }
    return true;
}

bool cone_contains(const Fan& fan, const std::vector<int>& cone, const RatVec& x) {
    // feasibility of {sum t_i u_i = x, t >= 0} in the multipliers
    const int k = static_cast<int>(cone.size());
    Int lcm = 1;
    for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    IneqSystem sys(k);
    for (int i = 0; i < fan.dim; ++i) {
        IntVec row(k);
        for (int j = 0; j < k; ++j) row[j] = fan.rays[cone[j]][i] * lcm;
        const Int rhs = numerator(x[i] * Rat(lcm));
        IntVec neg = vec_neg(row);
        sys.add(std::move(row), rhs);
        sys.add(std::move(neg), -rhs);
    }
    for (int j = 0; j < k; ++j) {
        IntVec row(k);
        row[j] = 1;
        sys.add(std::move(row), 0);
    }
    return fm_feasible(sys);
}

}  // namespace torquiv

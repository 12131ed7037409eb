#include "torquiv/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "torquiv/errors.hpp"

namespace torquiv {

QuiverOfSections::QuiverOfSections(VarietyPtr x, std::vector<IntVec> vertices,
                                   std::vector<Arrow> arrows, bool non_line_bundle)
    : x_(std::move(x)),
      vertices_(std::move(vertices)),
      arrows_(std::move(arrows)),
      non_line_bundle_(non_line_bundle) {
    for (const auto& a : arrows_) adjacency_[{a.source, a.target}].push_back(a.id);
}

std::vector<int> QuiverOfSections::arrows_between(int s, int t) const {
    const auto it = adjacency_.find({s, t});
    return it == adjacency_.end() ? std::vector<int>{} : it->second;
}

namespace {

void check_distinct(const std::vector<IntVec>& classes) {
    std::set<IntVec> seen;
    for (const auto& c : classes)
        if (!seen.insert(c).second)
            throw DuplicateClassError("class " + vec_string(c) + " appears twice");
}

}  // namespace

std::vector<IntVec> order_vertices(const ToricVariety& x, const std::vector<IntVec>& classes) {
    check_distinct(classes);
    const int n = static_cast<int>(classes.size());
    // hom[i][j] = dim Hom(L_i, L_j) = #sections of v_j - v_i
    std::vector<std::vector<long>> hom(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) hom[i][j] = hom_dimension(x, vec_sub(classes[j], classes[i]));
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (hom[i][j] > 0 && hom[j][i] > 0)
                throw CyclicHomsError("sections run both ways between " +
                                      vec_string(classes[i]) + " and " + vec_string(classes[j]));
            if (hom[j][i] == 0 && hom[i][j] > 0) {
                edge[i][j] = true;
                ++indeg[j];
            }
        }
    auto pick_rank = [&](int i) {
        // zero class first, then input position
        return std::pair<int, int>(vec_is_zero(classes[i]) ? 0 : 1, i);
    };
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (placed[i] || indeg[i] != 0) continue;
            if (best < 0 || pick_rank(i) < pick_rank(best)) best = i;
        }
        if (best < 0) throw CyclicHomsError("section order contains a cycle");
        placed[best] = true;
        order.push_back(best);
        for (int j = 0; j < n; ++j)
            if (edge[best][j]) --indeg[j];
    }
    std::vector<IntVec> out;
    out.reserve(n);
    for (int i : order) out.push_back(classes[i]);
    return out;
}

QuiverOfSections quiver_of_sections(VarietyPtr x, const std::vector<IntVec>& classes) {
    const std::vector<IntVec> verts = order_vertices(*x, classes);
    const int n = static_cast<int>(verts.size());
    std::vector<std::vector<std::vector<Monomial>>> hom(n);
    for (int i = 0; i < n; ++i) {
        hom[i].resize(n);
        for (int j = i + 1; j < n; ++j) hom[i][j] = hom_basis(*x, vec_sub(verts[j], verts[i]));
    }
    std::vector<Arrow> arrows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::set<Monomial> products;
            for (int k = i + 1; k < j; ++k)
                for (const auto& b : hom[i][k])
                    for (const auto& c : hom[k][j]) products.insert(vec_add(b, c));
            for (const auto& m : hom[i][j]) {
                if (products.count(m)) continue;
                Arrow a;
                a.id = static_cast<int>(arrows.size());
                a.source = i;
                a.target = j;
                a.label = m;
                arrows.push_back(std::move(a));
            }
        }
    bool warn = false;
    for (const auto& v : verts)
        if (!x->is_line_bundle(v)) warn = true;
    return QuiverOfSections(std::move(x), verts, std::move(arrows), warn);
}

QuiverOfSections quiver_from_data(VarietyPtr x, std::vector<IntVec> vertices,
                                  std::vector<ArrowData> arrows) {
    check_distinct(vertices);
    const int n = static_cast<int>(vertices.size());
    // the vertex sequence must already respect the section order
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (hom_dimension(*x, vec_sub(vertices[i], vertices[j])) > 0)
                throw BadOrientationError("vertex " + std::to_string(j) +
                                          " has sections to earlier vertex " + std::to_string(i));
    std::vector<Arrow> out;
    for (auto& a : arrows) {
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n ||
            a.source >= a.target)
            throw BadOrientationError("arrow must run from an earlier to a later vertex");
        for (const auto& e : a.label)
            if (e < 0) throw BadLabelDegreeError("negative exponent in arrow label");
        if (x->from_wdiv_to_cl(a.label) != vec_sub(vertices[a.target], vertices[a.source]))
            throw BadLabelDegreeError("label " + monomial_string(a.label) +
                                      " has the wrong multidegree");
    }
    std::sort(arrows.begin(), arrows.end(), [](const ArrowData& l, const ArrowData& r) {
        if (l.source != r.source) return l.source < r.source;
        if (l.target != r.target) return l.target < r.target;
        return monomial_before(l.label, r.label);
    });
    for (size_t i = 0; i < arrows.size(); ++i) {
        Arrow a;
        a.id = static_cast<int>(i);
        a.source = arrows[i].source;
        a.target = arrows[i].target;
        a.label = std::move(arrows[i].label);
        out.push_back(std::move(a));
    }
    bool warn = false;
    for (const auto& v : vertices)
        if (!x->is_line_bundle(v)) warn = true;
    return QuiverOfSections(std::move(x), std::move(vertices), std::move(out), warn);
}

std::vector<Relation> relations(const QuiverOfSections& q, int max_len) {
    struct Path {
        std::vector<int> arrows;
        int source, target;
        Monomial label;
    };
    std::vector<Path> paths;
    for (const auto& a : q.arrows()) paths.push_back({{a.id}, a.source, a.target, a.label});
    std::vector<Path> frontier = paths;
    for (int len = 2; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (const auto& a : q.arrows()) {
                if (a.source != p.target) continue;
                Path e = p;
                e.arrows.push_back(a.id);
                e.target = a.target;
                e.label = vec_add(e.label, a.label);
                next.push_back(std::move(e));
            }
        paths.insert(paths.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::map<std::tuple<int, int, Monomial>, std::vector<const Path*>> groups;
    for (const auto& p : paths) groups[{p.source, p.target, p.label}].push_back(&p);
    std::vector<Relation> out;
    for (const auto& [key, ps] : groups) {
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) {
                const auto& l = ps[i]->arrows;
                const auto& r = ps[j]->arrows;
                if (l.front() == r.front() || l.back() == r.back()) continue;
                out.push_back(Relation{l, r});
            }
    }
    std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    return out;
}

std::string export_dot(const QuiverOfSections& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < q.num_vertices(); ++i)
        os << "  v" << i << " [label=\"" << vec_string(q.vertex_class(i)) << "\"];\n";
    for (const auto& a : q.arrows())
        os << "  v" << a.source << " -> v" << a.target << " [label=\""
           << monomial_string(a.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace torquiv

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torquiv/sections.hpp"
#include "torquiv/variety.hpp"

namespace torquiv {

struct Arrow {
    int id = 0;  // 0-based position in the quiver's arrow list
    int source = 0;
    int target = 0;
    Monomial label;

    // Arrows are named arrow_1, arrow_2, ... in displays.
    int display_index() const { return id + 1; }

    bool operator==(const Arrow&) const = default;
};

// Quiver of sections: one vertex per class (vertex 0 is the zero class when
// present), arrows the irreducible sections between them, labels monomials.
class QuiverOfSections {
public:
    QuiverOfSections(VarietyPtr x, std::vector<IntVec> vertices, std::vector<Arrow> arrows,
                     bool non_line_bundle);

    const VarietyPtr& variety() const { return x_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const IntVec& vertex_class(int i) const { return vertices_.at(i); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int id) const { return arrows_.at(id); }

    // ids of the arrows from s to t, in indexing order
    std::vector<int> arrows_between(int s, int t) const;

    // some vertex class failed the Cartier test; the quiver is still built
    bool non_line_bundle_warning() const { return non_line_bundle_; }

private:
    VarietyPtr x_;
    std::vector<IntVec> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::pair<int, int>, std::vector<int>> adjacency_;
    bool non_line_bundle_ = false;
};

// Total order extending the section order: i precedes j whenever
// Hom(L_j, L_i) = 0 and Hom(L_i, L_j) != 0. Incomparable pairs keep input
// order; the zero class, when present, is placed first. Throws
// DuplicateClassError / CyclicHomsError.
std::vector<IntVec> order_vertices(const ToricVariety& x, const std::vector<IntVec>& classes);

// Build the quiver of sections for the given classes. Arrows i -> j carry
// the monomials of Hom(L_i, L_j) that do not factor as a product of
// sections through any intermediate vertex; indexing is by
// (source, target, label) in canonical order.
QuiverOfSections quiver_of_sections(VarietyPtr x, const std::vector<IntVec>& classes);

// Assemble a quiver from explicit data; validates label degrees,
// orientation, and the vertex order invariant.
struct ArrowData {
    int source = 0;
    int target = 0;
    Monomial label;
};
QuiverOfSections quiver_from_data(VarietyPtr x, std::vector<IntVec> vertices,
                                  std::vector<ArrowData> arrows);

// A pair of distinct parallel paths (as arrow id sequences) with equal
// label product, sharing neither first nor last arrow.
struct Relation {
    std::vector<int> left;
    std::vector<int> right;

    bool operator==(const Relation&) const = default;
};

// All minimal parallel-path coincidences up to the given path length.
std::vector<Relation> relations(const QuiverOfSections& q, int max_len);

std::string export_dot(const QuiverOfSections& q);

}  // namespace torquiv

#include "torquiv/json_io.hpp"

#include <limits>

#include "torquiv/cohomology.hpp"
#include "torquiv/errors.hpp"

namespace torquiv {

namespace {

long long to_ll(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw JsonFormatError("integer too large for JSON serialization");
    return static_cast<long long>(x);
}

Int int_from_json(const json& j) {
    if (!j.is_number_integer())
        throw JsonFormatError("expected an exact integer, got " + j.dump());
    return Int(j.get<long long>());
}

}  // namespace

json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_ll(x));
    return a;
}

json to_json(const IntMatrix& m) {
    json a = json::array();
    for (int i = 0; i < m.rows; ++i) a.push_back(to_json(m.row(i)));
    return a;
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) throw JsonFormatError("expected an array of integers");
    IntVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

IntMatrix intmat_from_json(const json& j) {
    if (!j.is_array()) throw JsonFormatError("expected an array of rows");
    std::vector<IntVec> rows;
    for (const auto& r : j) rows.push_back(intvec_from_json(r));
    return IntMatrix::from_rows(rows);
}

FanFile fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
        throw JsonFormatError("fan JSON needs dim, rays and max_cones");
    FanFile f;
    if (!j["dim"].is_number_integer()) throw JsonFormatError("dim must be an integer");
    f.fan.dim = j["dim"].get<int>();
    for (const auto& r : j["rays"]) f.fan.rays.push_back(intvec_from_json(r));
    for (const auto& c : j["max_cones"]) {
        std::vector<int> cone;
        for (const auto& x : c) {
            if (!x.is_number_integer()) throw JsonFormatError("cone entries must be integers");
            cone.push_back(x.get<int>());
        }
        f.fan.max_cones.push_back(std::move(cone));
    }
    if (j.contains("deg")) f.deg = intmat_from_json(j["deg"]);
    return f;
}

json fan_to_json(const Fan& fan, const IntMatrix* deg) {
    json j;
    j["dim"] = fan.dim;
    j["rays"] = json::array();
    for (const auto& r : fan.rays) j["rays"].push_back(to_json(r));
    j["max_cones"] = fan.max_cones;
    if (deg) j["deg"] = to_json(*deg);
    return j;
}

std::vector<IntVec> classes_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("classes")) throw JsonFormatError("expected a classes array");
        arr = &j["classes"];
    }
    if (!arr->is_array() || arr->empty())
        throw JsonFormatError("expected a nonempty array of class vectors");
    std::vector<IntVec> out;
    for (const auto& c : *arr) out.push_back(intvec_from_json(c));
    return out;
}

json quiver_to_json(const QuiverOfSections& q) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : q.vertices()) j["vertices"].push_back(to_json(v));
    j["arrows"] = json::array();
    for (const auto& a : q.arrows()) {
        json e;
        e["index"] = a.id;
        e["source"] = a.source;
        e["target"] = a.target;
        e["label"] = to_json(a.label);
        j["arrows"].push_back(std::move(e));
    }
    return j;
}

QuiverOfSections quiver_from_json(VarietyPtr x, const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw JsonFormatError("quiver JSON needs vertices and arrows");
    std::vector<IntVec> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(intvec_from_json(v));
    std::vector<ArrowData> arrows;
    for (const auto& a : j["arrows"]) {
        ArrowData d;
        d.source = a.at("source").get<int>();
        d.target = a.at("target").get<int>();
        d.label = intvec_from_json(a.at("label"));
        arrows.push_back(std::move(d));
    }
    return quiver_from_data(std::move(x), std::move(vertices), std::move(arrows));
}

json forbidden_to_json(const ToricVariety& x) {
    json out = json::array();
    for (const auto& [i, sets] : forbidden_sets_by_degree(x)) {
        json e;
        e["i"] = i;
        e["sets"] = sets;
        out.push_back(std::move(e));
    }
    return out;
}

json cone_region_to_json(const ConeRegion& r) {
    json j;
    j["I"] = r.rays;
    j["w"] = to_json(r.w);
    j["H"] = to_json(r.h);
    return j;
}

}  // namespace torquiv

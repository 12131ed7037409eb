#pragma once

#include <json.hpp>
#include <optional>

#include "torquiv/cones.hpp"
#include "torquiv/quiver.hpp"

namespace torquiv {

using nlohmann::json;

// Integers are serialized as exact JSON integers; parsing rejects floats.
json to_json(const IntVec& v);
json to_json(const IntMatrix& m);
IntVec intvec_from_json(const json& j);
IntMatrix intmat_from_json(const json& j);

struct FanFile {
    Fan fan;
    std::optional<IntMatrix> deg;
};

// {"dim": n, "rays": [[..]..], "max_cones": [[..]..], "deg": [[..]..]?}
FanFile fan_from_json(const json& j);
json fan_to_json(const Fan& fan, const IntMatrix* deg = nullptr);

// [[class]...] or {"classes": [[class]...]}
std::vector<IntVec> classes_from_json(const json& j);

// {"vertices": [[..]..], "arrows": [{"index","source","target","label"}..]}
json quiver_to_json(const QuiverOfSections& q);
QuiverOfSections quiver_from_json(VarietyPtr x, const json& j);

// [{"i": degree, "sets": [[ray ids]..]}..]
json forbidden_to_json(const ToricVariety& x);

// {"I": [..], "w": [..], "H": [[..]..]}
json cone_region_to_json(const ConeRegion& r);

}  // namespace torquiv

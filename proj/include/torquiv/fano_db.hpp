#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torquiv/json_io.hpp"
#include "torquiv/quiver.hpp"

namespace torquiv {

using DbKey = std::pair<int, int>;  // (dimension, index)

struct ContractionEdge {
    DbKey target;
    // ray_matching[i] = source ray index carrying the same primitive vector
    // as target ray i
    std::vector<int> ray_matching;
};

struct DatabaseEntry {
    int dim = 0;
    int index = 0;
    Fan fan;
    IntMatrix deg;
    std::optional<std::vector<IntVec>> collection;
    std::vector<ContractionEdge> contractions;
};

// The three lattice maps induced on the divisor sequences by a divisorial
// contraction. The square deg_t . divisor_map = picard_map . deg_s commutes
// exactly.
struct ContractionMaps {
    IntMatrix character_map;
    IntMatrix divisor_map;
    IntMatrix picard_map;
};

ContractionMaps compose(const ContractionMaps& second, const ContractionMaps& first);

// Embedded database of smooth toric Fano varieties: the five surfaces and
// selected threefolds, each with a pinned deg matrix and a full strong
// exceptional collection. Loading validates every entry (smooth, complete,
// Fano, deg invariants, collections pass the cohomology check).
class Database {
public:
    static Database from_json(const json& j);
    static Database from_file(const std::string& path);
    // embedded copy unless TORQUIV_DB_PATH or an explicit path overrides it
    static const Database& builtin();
    static Database resolve(const std::string& override_path = "");

    bool has(int dim, int index) const;
    const DatabaseEntry& entry(int dim, int index) const;  // UnknownKeyError
    std::vector<DbKey> keys() const;

    VarietyPtr smooth_fano(int dim, int index) const;
    std::vector<IntVec> full_str_exc_coll(int dim, int index) const;  // NoCollectionError
    std::vector<std::pair<DbKey, DbKey>> contraction_list(int dim) const;

    // Maps for a stored edge; source == target gives identity maps.
    ContractionMaps contraction_maps(DbKey source, DbKey target) const;

    // Re-runs the load-time validation (collections strong exceptional,
    // contraction squares commute).
    void self_test() const;

    json dump() const;

private:
    std::map<DbKey, DatabaseEntry> entries_;
    std::map<DbKey, VarietyPtr> varieties_;

    void validate();
};

// picard_map applied to every class, duplicates removed, first occurrence
// order kept.
std::vector<IntVec> image_collection(const std::vector<IntVec>& collection,
                                     const ContractionMaps& maps);

// Push the quiver's collection along the chain and require the (optionally
// twisted) vanishing on every target. The first key must be the quiver's
// own variety.
bool do_higher_self_exts_vanish_chain(const QuiverOfSections& q, const std::vector<DbKey>& chain,
                                      std::optional<int> p, const Database& db);

// JSON text of the embedded database (defined in db_data.cpp).
const char* embedded_database_json();

}  // namespace torquiv

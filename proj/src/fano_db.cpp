#include "torquiv/fano_db.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "torquiv/cohomology.hpp"
#include "torquiv/positivity.hpp"

namespace torquiv {

namespace {

std::string key_string(DbKey k) {
    return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

}  // namespace

ContractionMaps compose(const ContractionMaps& second, const ContractionMaps& first) {
    return ContractionMaps{mat_mul(second.character_map, first.character_map),
                           mat_mul(second.divisor_map, first.divisor_map),
                           mat_mul(second.picard_map, first.picard_map)};
}

Database Database::from_json(const json& j) {
    if (!j.is_array()) throw JsonFormatError("database must be a JSON array of entries");
    Database db;
    for (const auto& e : j) {
        DatabaseEntry entry;
        entry.dim = e.at("dim").get<int>();
        entry.index = e.at("index").get<int>();
        const FanFile ff = fan_from_json(e.at("fan"));
        entry.fan = ff.fan;
        entry.deg = intmat_from_json(e.at("deg"));
        if (e.contains("collection")) entry.collection = classes_from_json(e["collection"]);
        if (e.contains("contractions"))
            for (const auto& c : e["contractions"]) {
                ContractionEdge edge;
                edge.target = {c.at("target").at(0).get<int>(), c.at("target").at(1).get<int>()};
                for (const auto& m : c.at("ray_matching")) edge.ray_matching.push_back(m.get<int>());
                entry.contractions.push_back(std::move(edge));
            }
        const DbKey key{entry.dim, entry.index};
        if (!db.entries_.emplace(key, std::move(entry)).second)
            throw JsonFormatError("duplicate database key " + key_string(key));
    }
    db.validate();
    return db;
}

Database Database::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open database file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw JsonFormatError("database file " + path + ": " + e.what());
    }
    return from_json(j);
}

const Database& Database::builtin() {
    static const Database db = resolve();
    return db;
}

Database Database::resolve(const std::string& override_path) {
    if (!override_path.empty()) return from_file(override_path);
    if (const char* env = std::getenv("TORQUIV_DB_PATH"); env && *env) return from_file(env);
    return from_json(json::parse(embedded_database_json()));
}

void Database::validate() {
    for (auto& [key, e] : entries_) {
        VarietyPtr x;
        try {
            x = ToricVariety::make(e.fan, e.deg);
        } catch (const Error& err) {
            throw Error("database entry " + key_string(key) + ": " + err.what());
        }
        if (!is_smooth(e.fan))
            throw Error("database entry " + key_string(key) + " is not smooth");
        const IntVec one(x->num_rays(), Int(1));
        for (const auto& w : walls(*x))
            if (intersection_number(*x, one, w) <= 0)
                throw Error("database entry " + key_string(key) + " is not Fano");
        if (e.collection) {
            for (const auto& c : *e.collection)
                if (static_cast<int>(c.size()) != x->cl_rank())
                    throw Error("database entry " + key_string(key) +
                                " has a collection vector of the wrong length");
            if (!classes_strong_exceptional(*x, *e.collection, 0))
                throw Error("database entry " + key_string(key) +
                            ": stored collection is not strong exceptional");
        }
        varieties_[key] = std::move(x);
    }
    // edges: matching must preserve ray vectors and the square must commute
    for (const auto& [key, e] : entries_) {
        for (const auto& edge : e.contractions) {
            if (!entries_.count(edge.target))
                throw Error("contraction edge " + key_string(key) + " -> " +
                            key_string(edge.target) + " targets a missing entry");
            const auto& t = entries_.at(edge.target);
            if (t.fan.dim != e.fan.dim)
                throw Error("contraction edge changes lattice rank");
            if (edge.ray_matching.size() != t.fan.rays.size())
                throw Error("ray matching has wrong length");
            for (size_t i = 0; i < edge.ray_matching.size(); ++i) {
                const int s = edge.ray_matching[i];
                if (s < 0 || s >= static_cast<int>(e.fan.rays.size()) ||
                    e.fan.rays[s] != t.fan.rays[i])
                    throw Error("ray matching does not preserve primitive vectors on edge " +
                                key_string(key) + " -> " + key_string(edge.target));
            }
            contraction_maps(key, edge.target);  // throws NonCommutingError on failure
        }
    }
}

bool Database::has(int dim, int index) const { return entries_.count({dim, index}) > 0; }

const DatabaseEntry& Database::entry(int dim, int index) const {
    const auto it = entries_.find({dim, index});
    if (it == entries_.end())
        throw UnknownKeyError("no database entry " + key_string({dim, index}));
    return it->second;
}

std::vector<DbKey> Database::keys() const {
    std::vector<DbKey> out;
    for (const auto& [k, e] : entries_) out.push_back(k);
    return out;
}

VarietyPtr Database::smooth_fano(int dim, int index) const {
    entry(dim, index);
    return varieties_.at({dim, index});
}

std::vector<IntVec> Database::full_str_exc_coll(int dim, int index) const {
    const auto& e = entry(dim, index);
    if (!e.collection)
        throw NoCollectionError("no stored collection for " + key_string({dim, index}));
    return *e.collection;
}

std::vector<std::pair<DbKey, DbKey>> Database::contraction_list(int dim) const {
    std::vector<std::pair<DbKey, DbKey>> out;
    for (const auto& [key, e] : entries_) {
        if (key.first != dim) continue;
        for (const auto& edge : e.contractions) out.emplace_back(key, edge.target);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ContractionMaps Database::contraction_maps(DbKey source, DbKey target) const {
    const auto& s = entry(source.first, source.second);
    if (source == target) {
        const int n = s.fan.dim;
        const int nr = static_cast<int>(s.fan.rays.size());
        return ContractionMaps{IntMatrix::identity(n), IntMatrix::identity(nr),
                               IntMatrix::identity(s.deg.rows)};
    }
    const ContractionEdge* edge = nullptr;
    for (const auto& c : s.contractions)
        if (c.target == target) edge = &c;
    if (!edge)
        throw NoSuchEdgeError("no contraction edge " + key_string(source) + " -> " +
                              key_string(target));
    const auto& t = entry(target.first, target.second);
    const int ns = static_cast<int>(s.fan.rays.size());
    const int nt = static_cast<int>(t.fan.rays.size());
    ContractionMaps maps;
    maps.character_map = IntMatrix::identity(s.fan.dim);
    maps.divisor_map = IntMatrix(nt, ns);
    for (int i = 0; i < nt; ++i) maps.divisor_map.at(i, edge->ray_matching[i]) = 1;
    // unique picard map closing the square: pic . deg_s = deg_t . divisor_map
    const IntMatrix rhs = mat_mul(t.deg, maps.divisor_map);
    const IntMatrix deg_s_t = s.deg.transpose();
    maps.picard_map = IntMatrix(t.deg.rows, s.deg.rows);
    for (int i = 0; i < t.deg.rows; ++i) {
        const auto row = solve_integer(deg_s_t, rhs.row(i));
        if (!row)
            throw NonCommutingError("no integral picard map for " + key_string(source) +
                                    " -> " + key_string(target));
        for (int j = 0; j < s.deg.rows; ++j) maps.picard_map.at(i, j) = (*row)[j];
    }
    if (mat_mul(maps.picard_map, s.deg) != rhs)
        throw NonCommutingError("picard map does not close the square");
    return maps;
}

void Database::self_test() const {
    for (const auto& [key, e] : entries_) {
        const auto x = varieties_.at(key);
        if (e.collection && !classes_strong_exceptional(*x, *e.collection, 0))
            throw Error("self-test failed: collection of " + key_string(key));
        for (const auto& edge : e.contractions) {
            const auto maps = contraction_maps(key, edge.target);
            const auto& t = entry(edge.target.first, edge.target.second);
            if (mat_mul(maps.picard_map, e.deg) != mat_mul(t.deg, maps.divisor_map))
                throw Error("self-test failed: contraction square " + key_string(key));
        }
    }
}

json Database::dump() const {
    json out = json::array();
    for (const auto& [key, e] : entries_) {
        json j;
        j["dim"] = e.dim;
        j["index"] = e.index;
        j["fan"] = fan_to_json(e.fan);
        j["deg"] = to_json(e.deg);
        if (e.collection) {
            json coll = json::array();
            for (const auto& c : *e.collection) coll.push_back(to_json(c));
            j["collection"] = std::move(coll);
        }
        if (!e.contractions.empty()) {
            json cs = json::array();
            for (const auto& c : e.contractions) {
                json cj;
                cj["target"] = {c.target.first, c.target.second};
                cj["ray_matching"] = c.ray_matching;
                cs.push_back(std::move(cj));
            }
            j["contractions"] = std::move(cs);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<IntVec> image_collection(const std::vector<IntVec>& collection,
                                     const ContractionMaps& maps) {
    std::vector<IntVec> out;
    for (const auto& c : collection) {
        IntVec v = maps.picard_map.apply(c);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
    return out;
}

bool do_higher_self_exts_vanish_chain(const QuiverOfSections& q, const std::vector<DbKey>& chain,
                                      std::optional<int> p, const Database& db) {
    if (chain.empty()) throw Error("empty contraction chain");
    const auto& first = db.entry(chain.front().first, chain.front().second);
    if (q.variety()->fan() != first.fan || q.variety()->deg() != first.deg)
        throw Error("quiver variety does not match the first chain entry " +
                    key_string(chain.front()));
    ContractionMaps acc = db.contraction_maps(chain.front(), chain.front());
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) acc = compose(db.contraction_maps(chain[i - 1], chain[i]), acc);
        const auto xt = db.smooth_fano(chain[i].first, chain[i].second);
        const auto img = image_collection(q.vertices(), acc);
        if (!classes_strong_exceptional(*xt, img, p.value_or(0))) return false;
    }
    return true;
}

}  // namespace torquiv

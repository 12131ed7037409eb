#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "torquiv/cohomology.hpp"
#include "torquiv/fano_db.hpp"
#include "torquiv/positivity.hpp"

using namespace torquiv;

namespace {

std::vector<long> parse_int_list(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        if (cur.empty()) throw Error("empty entry in list '" + text + "'");
        out.push_back(std::stol(cur));
    }
    if (out.empty()) throw Error("empty list");
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw JsonFormatError(path + ": " + e.what());
    }
}

// shared option block: pick a variety (and maybe a collection) from the
// database or from files
struct SourceOptions {
    std::string fan_file;
    std::vector<int> db_key;
    std::string collection_file;
    bool collection_db = false;
    std::string db_path;

    void add_variety_options(CLI::App* cmd, bool with_collection) {
        auto* fan = cmd->add_option("--fan", fan_file, "fan JSON file");
        auto* db = cmd->add_option("--db", db_key, "database key: dim index")->expected(2);
        fan->excludes(db);
        db->excludes(fan);
        if (with_collection) {
            auto* cf = cmd->add_option("--collection", collection_file,
                                       "collection JSON file (array of class vectors)");
            auto* cd = cmd->add_flag("--collection-db", collection_db,
                                     "use the collection stored in the database");
            cf->excludes(cd);
            cd->excludes(cf);
        }
    }

    Database database() const { return Database::resolve(db_path); }

    VarietyPtr variety(const Database& db) const {
        if (!db_key.empty()) return db.smooth_fano(db_key[0], db_key[1]);
        if (fan_file.empty()) throw Error("need --fan or --db");
        const FanFile ff = fan_from_json(read_json_file(fan_file));
        return ToricVariety::make(ff.fan, ff.deg);
    }

    std::vector<IntVec> collection(const Database& db) const {
        if (collection_db || (collection_file.empty() && !db_key.empty()))
            return db.full_str_exc_coll(db_key.at(0), db_key.at(1));
        if (collection_file.empty()) throw Error("need --collection or --collection-db");
        return classes_from_json(read_json_file(collection_file));
    }
};

void print_fano(const Database& db, int dim, int index, bool as_json) {
    const auto& e = db.entry(dim, index);
    const auto x = db.smooth_fano(dim, index);
    if (as_json) {
        json j = fan_to_json(e.fan, &e.deg);
        j["cl_rank"] = x->cl_rank();
        if (e.collection) {
            json coll = json::array();
            for (const auto& c : *e.collection) coll.push_back(to_json(c));
            j["collection"] = std::move(coll);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "smooth toric Fano (" << dim << ", " << index << ")\n";
    std::cout << "dim " << x->dim() << ", " << x->num_rays() << " rays, class group rank "
              << x->cl_rank() << "\n";
    std::cout << "rays:\n";
    for (int i = 0; i < x->num_rays(); ++i)
        std::cout << "  x_" << i << " -> " << vec_string(e.fan.rays[i]) << "\n";
    std::cout << "max cones:";
    for (const auto& c : e.fan.max_cones) {
        std::cout << " {";
        for (size_t i = 0; i < c.size(); ++i) std::cout << (i ? ", " : "") << c[i];
        std::cout << "}";
    }
    std::cout << "\ndeg:\n";
    for (int i = 0; i < x->cl_rank(); ++i) std::cout << "  " << vec_string(x->deg().row(i)) << "\n";
    if (e.collection) {
        std::cout << "collection:";
        for (const auto& c : *e.collection) std::cout << " " << vec_string(c);
        std::cout << "\n";
    }
}

void print_quiver_human(const QuiverOfSections& q) {
    for (int v = 0; v < q.num_vertices(); ++v) {
        std::cout << "vertex " << v << "  degree " << vec_string(q.vertex_class(v)) << "\n";
        for (int t = 0; t < q.num_vertices(); ++t) {
            const auto ids = q.arrows_between(v, t);
            if (ids.empty()) continue;
            std::cout << "  " << t << " => {";
            for (size_t i = 0; i < ids.size(); ++i)
                std::cout << (i ? ", " : "") << monomial_string(q.arrow(ids[i]).label);
            std::cout << "}\n";
        }
    }
    std::cout << "arrows: " << q.arrows().size() << "\n";
    if (q.non_line_bundle_warning())
        std::cout << "warning: some classes are not line bundles\n";
}

int run(int argc, char** argv) {
    CLI::App app{"quivers of sections on complete toric varieties"};
    app.require_subcommand(1);
    SourceOptions src;
    app.add_option("--db-path", src.db_path, "database file overriding TORQUIV_DB_PATH");

    // fano
    auto* fano = app.add_subcommand("fano", "show a database variety");
    std::vector<int> fano_key;
    bool fano_json = false;
    fano->add_option("dim", fano_key, "")->expected(2);
    fano->add_flag("--json", fano_json, "JSON output");

    // quiver
    auto* quiver = app.add_subcommand("quiver", "build a quiver of sections");
    SourceOptions qsrc;
    std::string quiver_out;
    quiver->add_option("--out", quiver_out, "output format: dot or json");
    qsrc.add_variety_options(quiver, true);

    // check
    auto* check = app.add_subcommand("check", "strong exceptionality predicates");
    SourceOptions csrc;
    int twist = -1;
    std::string chain_text;
    check->add_option("--twist", twist, "max anticanonical twist p (>= 0)");
    check->add_option("--chain", chain_text, "comma list of database indices, e.g. 4,3,2,0");
    csrc.add_variety_options(check, true);

    // forbidden
    auto* forb = app.add_subcommand("forbidden", "forbidden ray subsets");
    SourceOptions fsrc;
    bool forb_json = false;
    forb->add_flag("--json", forb_json, "JSON output");
    fsrc.add_variety_options(forb, false);

    // nef
    auto* nef = app.add_subcommand("nef", "anticanonically twisted nef check");
    SourceOptions nsrc;
    long nef_n = -1;
    nef->add_option("--n", nef_n, "twist power n (>= 0)")->required();
    nsrc.add_variety_options(nef, true);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "cohomology of a divisor");
    SourceOptions osrc;
    std::string divisor_text;
    oracle->add_option("--divisor", divisor_text, "comma list, one entry per ray")->required();
    osrc.add_variety_options(oracle, false);

    // export-db
    auto* exp = app.add_subcommand("export-db", "dump the database as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (SourceOptions* s : {&qsrc, &csrc, &fsrc, &nsrc, &osrc}) s->db_path = src.db_path;

    if (fano->parsed()) {
        print_fano(src.database(), fano_key.at(0), fano_key.at(1), fano_json);
        return 0;
    }
    if (quiver->parsed()) {
        const Database db = qsrc.database();
        const auto q = quiver_of_sections(qsrc.variety(db), qsrc.collection(db));
        if (quiver_out == "dot")
            std::cout << export_dot(q);
        else if (quiver_out == "json")
            std::cout << quiver_to_json(q).dump(2) << "\n";
        else if (quiver_out.empty())
            print_quiver_human(q);
        else
            throw Error("unknown output format '" + quiver_out + "'");
        return 0;
    }
    if (check->parsed()) {
        const Database db = csrc.database();
        const auto q = quiver_of_sections(csrc.variety(db), csrc.collection(db));
        bool ok;
        if (!chain_text.empty()) {
            if (csrc.db_key.empty()) throw Error("--chain needs a --db variety");
            std::vector<DbKey> chain;
            for (long i : parse_int_list(chain_text))
                chain.emplace_back(csrc.db_key[0], static_cast<int>(i));
            ok = do_higher_self_exts_vanish_chain(
                q, chain, twist >= 0 ? std::optional<int>(twist) : std::nullopt, db);
        } else if (twist >= 0) {
            ok = do_higher_self_exts_vanish(q, twist);
        } else {
            ok = do_higher_self_exts_vanish(q);
        }
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (forb->parsed()) {
        const Database db = fsrc.database();
        const auto x = fsrc.variety(db);
        if (forb_json) {
            std::cout << forbidden_to_json(*x).dump(2) << "\n";
        } else {
            for (const auto& [i, sets] : forbidden_sets_by_degree(*x)) {
                std::cout << i << " => {";
                for (size_t s = 0; s < sets.size(); ++s) {
                    std::cout << (s ? "," : "") << "{";
                    for (size_t t = 0; t < sets[s].size(); ++t)
                        std::cout << (t ? "," : "") << sets[s][t];
                    std::cout << "}";
                }
                std::cout << "}\n";
            }
        }
        return 0;
    }
    if (nef->parsed()) {
        if (nef_n < 0) throw Error("--n must be nonnegative");
        const Database db = nsrc.database();
        const auto q = quiver_of_sections(nsrc.variety(db), nsrc.collection(db));
        const bool ok = bundles_nef_check(q, nef_n);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (oracle->parsed()) {
        const Database db = osrc.database();
        const auto x = osrc.variety(db);
        IntVec divisor;
        for (long v : parse_int_list(divisor_text)) divisor.emplace_back(v);
        const IntVec h = cohomology_oracle(*x, divisor);
        std::cout << "h = (";
        for (size_t i = 0; i < h.size(); ++i) std::cout << (i ? ", " : "") << h[i];
        std::cout << ")\n";
        return 0;
    }
    if (exp->parsed()) {
        std::cout << src.database().dump().dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "twh/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "twh/errors.hpp"
#include "twh/presets.hpp"

namespace twh {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    require(j.is_object(), where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        require(allowed.count(it.key()) > 0, "unknown key \"" + it.key() + "\" in " + where);
}

Rat rat_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    require(j.is_string(), where + ": expected an integer or a \"p/q\" string");
    return parse_rat(j.get<std::string>());
}

long int_from(const Json& j, const std::string& where) {
    require(j.is_number_integer(), where + ": expected an integer");
    return j.get<long>();
}

std::vector<Rat> rat_vector(const Json& j, std::size_t n, const std::string& where) {
    require(j.is_array() && j.size() == n, where + ": expected an array of length " + std::to_string(n));
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(rat_from(x, where));
    return out;
}

IntMat int_matrix(const Json& j, std::size_t n, const std::string& where) {
    require(j.is_array() && j.size() == n, where + ": expected " + std::to_string(n) + " rows");
    IntMat m;
    for (const auto& row : j) {
        require(row.is_array() && row.size() == n, where + ": expected rows of length " + std::to_string(n));
        m.emplace_back();
        for (const auto& x : row) m.back().push_back(int_from(x, where));
    }
    return m;
}

QMatrix rat_matrix(const Json& j, std::size_t n, const std::string& where) {
    require(j.is_array() && j.size() == n, where + ": expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) rows.push_back(rat_vector(row, n, where));
    return QMatrix::from_rows(rows);
}

Json rat_json(const Rat& r) { return to_string(r); }

std::vector<Rotation> table_from_entries(const Json& entries, std::size_t n, const std::string& where) {
    require(entries.is_array(), where + ": entries must be an array");
    std::vector<Rotation> table(n * n);
    for (const auto& e : entries) {
        require(e.is_array() && e.size() == 3, where + ": entries are [i, j, \"p/q\"]");
        const long i = int_from(e[0], where), k = int_from(e[1], where);
        require(i >= 0 && k >= 0 && static_cast<std::size_t>(i) < n && static_cast<std::size_t>(k) < n,
                where + ": element index out of range");
        table[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(k)] = Rotation(rat_from(e[2], where));
    }
    return table;
}

Json entries_from_table(const std::vector<Rotation>& table, std::size_t n) {
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (table[i * n + k] != Rotation()) out.push_back(Json::array({i, k, table[i * n + k].str()}));
    return out;
}

Cocycle cocycle_from(const Json& j, const ActionGroup& g, const std::shared_ptr<const FiniteGroup>& group) {
    only_keys(j, {"type", "entries", "matrix", "mod", "generators", "strict"}, "cocycle");
    require(j.contains("type") && j["type"].is_string(), "cocycle needs a type");
    const std::string type = j["type"];
    const std::size_t n = group->order();
    if (type == "trivial") return Cocycle(group);
    if (type == "table") {
        require(j.contains("entries"), "table cocycle needs entries");
        const bool strict = j.value("strict", false);
        return validate_cocycle(group, table_from_entries(j["entries"], n, "cocycle"), strict);
    }
    if (type == "bilinear") {
        require(j.contains("matrix") && j.contains("mod"), "bilinear cocycle needs matrix and mod");
        std::vector<std::uint32_t> gens;
        if (j.contains("generators")) {
            for (const auto& x : j["generators"]) {
                const long i = int_from(x, "cocycle generators");
                require(i >= 0 && static_cast<std::size_t>(i) < n, "cocycle generator index out of range");
                gens.push_back(static_cast<std::uint32_t>(i));
            }
        } else {
            for (const auto& m : g.generators) gens.push_back(g.index_of(m));
        }
        std::vector<std::vector<long>> b;
        require(j["matrix"].is_array(), "bilinear matrix must be an array");
        for (const auto& row : j["matrix"]) {
            require(row.is_array(), "bilinear matrix rows must be arrays");
            b.emplace_back();
            for (const auto& x : row) b.back().push_back(int_from(x, "bilinear matrix"));
        }
        return bilinear_cocycle(group, gens, b, int_from(j["mod"], "bilinear mod"));
    }
    throw ValidationError("unknown cocycle type \"" + type + "\"");
}

RootDatum hecke_from(const Json& j) {
    only_keys(j, {"name", "rank", "simple_roots", "coroots", "k", "gamma_generators", "gamma_cocycle"}, "hecke section");
    RootDatum r;
    r.name = j.value("name", std::string("hecke"));
    require(j.contains("rank"), "hecke section needs a rank");
    const long d = int_from(j["rank"], "hecke rank");
    require(d >= 0, "hecke rank must be nonnegative");
    r.rank = static_cast<std::size_t>(d);
    const Json roots = j.value("simple_roots", Json::array());
    const Json coroots = j.value("coroots", Json::array());
    const Json k = j.value("k", Json::array());
    require(roots.is_array() && coroots.is_array() && k.is_array(), "roots, coroots and k must be arrays");
    require(roots.size() == coroots.size() && roots.size() == k.size(),
            "hecke section needs one coroot and one k value per simple root");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        r.simple_roots.push_back(rat_vector(roots[i], r.rank, "simple root"));
        r.coroots.push_back(rat_vector(coroots[i], r.rank, "coroot"));
        r.k.push_back(rat_from(k[i], "k"));
    }
    for (const auto& g : j.value("gamma_generators", Json::array())) r.gamma_generators.push_back(rat_matrix(g, r.rank, "gamma generator"));
    if (j.contains("gamma_cocycle")) {
        const Json& c = j["gamma_cocycle"];
        only_keys(c, {"type", "entries"}, "gamma cocycle");
        const std::string type = c.value("type", std::string("trivial"));
        if (type == "table") {
            // size is checked against the generated group when the algebra is built
            HeckeAlgebra probe(r);
            r.gamma_cocycle = table_from_entries(c.value("entries", Json::array()), probe.gamma().elements.size(), "gamma cocycle");
        } else {
            require(type == "trivial", "gamma cocycle type must be trivial or table");
        }
    }
    HeckeAlgebra check(r);  // validates the whole section
    return r;
}

Json hecke_to_json(const RootDatum& r) {
    Json j;
    j["name"] = r.name;
    j["rank"] = r.rank;
    Json roots = Json::array(), coroots = Json::array(), k = Json::array(), gens = Json::array();
    for (std::size_t i = 0; i < r.simple_roots.size(); ++i) {
        Json a = Json::array(), c = Json::array();
        for (const auto& x : r.simple_roots[i]) a.push_back(rat_json(x));
        for (const auto& x : r.coroots[i]) c.push_back(rat_json(x));
        roots.push_back(a);
        coroots.push_back(c);
        k.push_back(rat_json(r.k[i]));
    }
    for (const auto& g : r.gamma_generators) {
        Json m = Json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(rat_json(g(i, c)));
            m.push_back(row);
        }
        gens.push_back(m);
    }
    j["simple_roots"] = roots;
    j["coroots"] = coroots;
    j["k"] = k;
    j["gamma_generators"] = gens;
    if (r.gamma_cocycle.empty()) {
        j["gamma_cocycle"] = {{"type", "trivial"}};
    } else {
        const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(r.gamma_cocycle.size()))));
        j["gamma_cocycle"] = {{"type", "table"}, {"entries", entries_from_table(r.gamma_cocycle, n)}};
    }
    return j;
}

}  // namespace

Json map_to_json(const AffineLatticeMap& m) {
    Json j;
    j["matrix"] = m.matrix;
    Json t = Json::array();
    for (const auto& r : m.translation) t.push_back(r.str());
    j["translation"] = t;
    if (!m.tag.empty()) j["tag"] = m.tag;
    return j;
}

AffineLatticeMap map_from_json(const Json& j, std::size_t rank) {
    only_keys(j, {"matrix", "translation", "tag"}, "generator");
    require(j.contains("matrix"), "generator needs a matrix");
    AffineLatticeMap m;
    m.matrix = int_matrix(j["matrix"], rank, "generator matrix");
    m.translation.assign(rank, Rotation());
    if (j.contains("translation")) {
        const auto t = rat_vector(j["translation"], rank, "generator translation");
        for (std::size_t i = 0; i < rank; ++i) m.translation[i] = Rotation(t[i]);
    }
    if (j.contains("tag")) {
        require(j["tag"].is_array(), "tag must be an array");
        for (const auto& x : j["tag"]) m.tag.push_back(static_cast<int>(int_from(x, "tag")));
    }
    validate_map(m, rank);
    return m;
}

Json point_to_json(const TorusPoint& x) {
    Json j = Json::array();
    for (const auto& r : x) j.push_back(r.str());
    return j;
}

TorusPoint parse_point(const std::string& text) {
    TorusPoint x;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto b = part.find_first_not_of(' '), e = part.find_last_not_of(' ');
        require(b != std::string::npos, "empty coordinate in point \"" + text + "\"");
        x.push_back(Rotation::parse(part.substr(b, e - b + 1)));
    }
    return x;
}

std::string point_str(const TorusPoint& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + x[i].str();
    return out;
}

DatumFile datum_from_json(const Json& j, std::size_t max_group_order) {
    only_keys(j, {"name", "preset", "k", "rank", "variant", "generators", "cocycle", "hecke"}, "datum");
    if (j.contains("preset")) {
        require(j["preset"].is_string(), "preset must be a string");
        return load_preset(j["preset"], j.contains("k") ? rat_from(j["k"], "k") : Rat(1));
    }
    DatumFile f;
    f.name = j.value("name", std::string("datum"));
    if (j.contains("rank")) {
        const long d = int_from(j["rank"], "rank");
        require(d >= 0, "rank must be nonnegative");
        const std::size_t rank = static_cast<std::size_t>(d);
        std::vector<AffineLatticeMap> gens;
        const Json generators = j.value("generators", Json::array());
        require(generators.is_array(), "generators must be an array");
        for (const auto& g : generators) gens.push_back(map_from_json(g, rank));
        BernsteinDatum datum = make_datum(rank, gens, max_group_order);
        datum.name = f.name;
        if (j.contains("variant")) {
            const std::string v = j["variant"];
            require(v == "algebraic" || v == "smooth-compact", "variant must be algebraic or smooth-compact");
            datum.variant = v;
        }
        if (j.contains("cocycle")) datum.cocycle = cocycle_from(j["cocycle"], datum.group, datum.cocycle.group_ptr());
        f.datum = std::move(datum);
    }
    if (j.contains("hecke")) f.hecke = hecke_from(j["hecke"]);
    require(f.datum || f.hecke, "datum needs a torus section (rank, generators) or a hecke section");
    return f;
}

DatumFile datum_from_text(const std::string& text, std::size_t max_group_order) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return datum_from_json(j, max_group_order);
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("datum schema violation: ") + e.what());
    }
}

DatumFile datum_from_file(const std::string& path, std::size_t max_group_order) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read datum file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return datum_from_text(ss.str(), max_group_order);
}

Json datum_to_json(const DatumFile& f) {
    Json j;
    j["name"] = f.name;
    if (f.datum) {
        const BernsteinDatum& d = *f.datum;
        j["rank"] = d.rank();
        j["variant"] = d.variant;
        Json gens = Json::array();
        for (const auto& g : d.group.generators) gens.push_back(map_to_json(g));
        j["generators"] = gens;
        if (d.cocycle.is_trivial())
            j["cocycle"] = {{"type", "trivial"}};
        else
            j["cocycle"] = {{"type", "table"}, {"entries", entries_from_table(d.cocycle.table(), d.order())}};
    }
    if (f.hecke) j["hecke"] = hecke_to_json(*f.hecke);
    return j;
}

std::vector<PresetInfo> preset_list() {
    return {
        {"hecke-rank1", "graded Hecke algebra of type A1 (alpha = x, coroot 2), parameter --k"},
        {"quaternion-2torus", "(Z/2)^2 inverting coordinates of the 2-torus, bilinear cocycle with C[G, c] = M_2(C)"},
        {"sl2-generic-chi", "circle with the trivial group"},
        {"sl2-iwahori", "circle with Z/2 acting by inversion, trivial cocycle"},
        {"sl2-ramified-quadratic", "circle with Z/2 acting by inversion, trivial cocycle (second block label)"},
    };
}

DatumFile load_preset(const std::string& name, const Rat& k) {
    DatumFile f;
    f.name = name;
    f.preset = name;
    if (name == "sl2-iwahori" || name == "sl2-ramified-quadratic") {
        f.datum = sl2_iwahori_datum();
    } else if (name == "sl2-generic-chi") {
        f.datum = trivial_group_datum(1);
    } else if (name == "quaternion-2torus") {
        f.datum = quaternion_datum();
    } else if (name == "hecke-rank1") {
        f.hecke = rank_one_root_datum(k);
        f.hecke->name = name;
    } else {
        throw ValidationError("unknown preset \"" + name + "\"");
    }
    if (f.datum) f.datum->name = name;
    return f;
}

}  // namespace twh

#include "twh/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "twh/crossed_product.hpp"
#include "twh/errors.hpp"
#include "twh/hecke.hpp"
#include "twh/homology.hpp"
#include "twh/io.hpp"
#include "twh/oracle.hpp"

namespace twh {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string datum_path;
    std::string preset;
    std::string k = "1";
    std::string orbit;
    std::string format = "json";
    std::uint64_t seed = 20240901;
    std::size_t max_group_order = 10000;
    bool breakdown = false;
    bool canonical = false;
    bool formal_r = false;
    std::vector<std::string> lambdas;
};

void add_source(CLI::App* sub, Options& o) {
    sub->add_option("--datum", o.datum_path, "datum JSON file");
    sub->add_option("--preset", o.preset, "named preset (see `preset list`)");
    sub->add_option("--k", o.k, "parameter for the hecke-rank1 preset, as p/q");
    sub->add_option("--max-group-order", o.max_group_order, "cap on generated group orders")->capture_default_str();
}

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
}

void add_orbit(CLI::App* sub, Options& o) {
    sub->add_option("--orbit", o.orbit, "orbit base point \"p/q,...\" in (Q/Z)^d")->required();
}

void add_seed(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
}

DatumFile load(const Options& o) {
    if (o.datum_path.empty() == o.preset.empty()) throw UsageError("give exactly one of --datum and --preset");
    if (!o.preset.empty()) return load_preset(o.preset, parse_rat(o.k));
    return datum_from_file(o.datum_path, o.max_group_order);
}

const BernsteinDatum& torus(const DatumFile& f) {
    if (!f.datum) throw ValidationError("the datum has no torus section");
    return *f.datum;
}

const RootDatum& hecke_section(const DatumFile& f) {
    if (!f.hecke) throw ValidationError("the datum has no hecke section");
    return *f.hecke;
}

TorusPoint orbit_point(const Options& o, const BernsteinDatum& d) {
    const TorusPoint x = parse_point(o.orbit);
    if (x.size() != d.rank())
        throw ValidationError("orbit point has " + std::to_string(x.size()) + " coordinates, the torus has rank " +
                              std::to_string(d.rank()));
    return x;
}

Weight parse_weight(const std::string& text, std::size_t rank) {
    Weight w;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) w.push_back(GaussRat::parse(part));
    if (w.size() != rank)
        throw ValidationError("weight \"" + text + "\" has " + std::to_string(w.size()) + " coordinates, t has dimension " +
                              std::to_string(rank));
    return w;
}

Json weight_json(const Weight& w) {
    Json j = Json::array();
    for (const auto& c : w) j.push_back(c.str());
    return j;
}

Json class_json(const ClassHomology& c) {
    return {{"representative", c.representative},
            {"class_size", c.class_size},
            {"centralizer_order", c.centralizer_order},
            {"empty", c.empty},
            {"fixed_dimension", c.fixed_dimension},
            {"component_count", c.component_count},
            {"component_orbits", c.component_orbits},
            {"twist_trivial", c.twist_trivial},
            {"form_rank", c.form_rank},
            {"generic_rank", c.generic_rank},
            {"invariant_cohomology", c.invariant_cohomology}};
}

Json summary_json(const HomologySummary& s, const BernsteinDatum* d) {
    Json classes = Json::array();
    for (const auto& c : s.classes) {
        Json j = class_json(c);
        if (d) j["representative_map"] = map_to_json(d->group.elements[c.representative]);
        classes.push_back(j);
    }
    return {{"variant", s.variant},
            {"rank", s.rank},
            {"classes", classes},
            {"generic_rank", s.generic_rank},
            {"invariant_cohomology", s.invariant_cohomology}};
}

Json breakdown_json(const RanksReport& r) {
    Json out = Json::array();
    for (const auto& c : r.breakdown) out.push_back({{"representative", c.representative}, {"even", c.even}, {"odd", c.odd}});
    return out;
}

// ---- table rendering ----

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_table(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

void render_rows(const Json& rows, std::ostream& os, const std::string& indent) {
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (auto it = r.begin(); it != r.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& r : rows) {
        cells.emplace_back();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            cells.back().push_back(r.contains(cols[i]) ? cell(r[cols[i]]) : "");
            width[i] = std::max(width[i], cells.back().back().size());
        }
    }
    auto line = [&](const std::vector<std::string>& v) {
        std::string s = indent;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += v[i];
            if (i + 1 < v.size()) s += std::string(width[i] - v[i].size() + 2, ' ');
        }
        os << s << '\n';
    };
    line(cols);
    for (const auto& r : cells) line(r);
}

void render_table(const Json& j, std::ostream& os, const std::string& indent = "") {
    if (is_table(j)) {
        render_rows(j, os, indent);
        return;
    }
    if (!j.is_object()) {
        os << indent << cell(j) << '\n';
        return;
    }
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object() || is_table(*it)) {
            os << indent << it.key() << ":\n";
            render_table(*it, os, indent + "  ");
        } else {
            os << indent << it.key() << std::string(width - it.key().size() + 2, ' ') << cell(*it) << '\n';
        }
    }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
    if (o.format == "table")
        render_table(j, out);
    else
        out << j.dump(2) << '\n';
}

// ---- subcommands ----

Json cmd_validate(const Options& o) {
    const DatumFile f = load(o);
    if (o.canonical) return datum_to_json(f);
    Json j{{"valid", true}, {"name", f.name}};
    if (f.datum) {
        const BernsteinDatum& d = *f.datum;
        j["torus"] = {{"rank", d.rank()},
                      {"variant", d.variant},
                      {"group_order", d.order()},
                      {"conjugacy_classes", conjugacy_classes(d.abstract_group()).size()},
                      {"regular_classes", regular_classes(d.cocycle).size()},
                      {"cocycle_trivial", d.cocycle.is_trivial()},
                      {"cocycle_value_order", d.cocycle.value_order()}};
    }
    if (f.hecke) {
        HeckeAlgebra h(*f.hecke, HeckeOptions{false, false, o.max_group_order});
        j["hecke"] = {{"rank", h.rank()},
                      {"simple_roots", h.simple_count()},
                      {"weyl_order", h.weyl().elements.size()},
                      {"gamma_order", h.gamma().elements.size()},
                      {"parameter_classes", h.parameter_count()}};
    }
    return j;
}

Json cmd_irr(const Options& o) {
    const DatumFile f = load(o);
    const BernsteinDatum& d = torus(f);
    const TorusPoint x = orbit_point(o, d);
    const auto fiber = extended_quotient_fiber(d, x);
    Json labels = Json::array();
    std::vector<std::size_t> dims;
    for (const auto& l : fiber.labels) {
        Json character = Json::array();
        for (std::size_t i = 0; i < fiber.stabilizer.size(); ++i)
            character.push_back(l.rho.image("T" + std::to_string(i)).trace().str());
        labels.push_back({{"index", l.index}, {"rho_dimension", l.rho_dimension}, {"dimension", l.dimension},
                          {"rho_character", character}});
        dims.push_back(l.dimension);
    }
    return {{"orbit", point_to_json(x)},
            {"orbit_size", fiber.orbit.points.size()},
            {"stabilizer", fiber.stabilizer},
            {"stabilizer_order", fiber.stabilizer.size()},
            {"regular_class_count", fiber.regular_class_count},
            {"label_count", fiber.labels.size()},
            {"dimensions", dims},
            {"labels", labels},
            {"certified", fiber.certificate.ok}};
}

Json cmd_hh(const Options& o) {
    const DatumFile f = load(o);
    if (f.datum) return summary_json(hh_summary(*f.datum), &*f.datum);
    return summary_json(hecke_hh_dimensions(HeckeAlgebra(hecke_section(f), HeckeOptions{false, false, o.max_group_order})),
                        nullptr);
}

Json cmd_hh0(const Options& o) {
    const DatumFile f = load(o);
    const BernsteinDatum& d = torus(f);
    const TorusPoint x = orbit_point(o, d);
    const std::size_t n = hh0_specialization(d, x);
    return {{"orbit", point_to_json(x)}, {"dimension", n}};
}

Json cmd_hp(const Options& o) {
    const DatumFile f = load(o);
    const RanksReport r = hp_dimensions(torus(f));
    return {{"variant", f.datum->variant}, {"HP0", r.even}, {"HP1", r.odd}, {"classes", breakdown_json(r)}};
}

Json cmd_k(const Options& o) {
    const DatumFile f = load(o);
    const RanksReport r = ktheory_ranks(torus(f));
    Json j{{"K0_rank", r.even}, {"K1_rank", r.odd}};
    if (o.breakdown) j["classes"] = breakdown_json(r);
    return j;
}

Json cmd_pairing(const Options& o) {
    const DatumFile f = load(o);
    const BernsteinDatum& d = torus(f);
    const TorusPoint x = orbit_point(o, d);
    const TracePairing p = trace_pairing_matrix(d, x);
    return {{"orbit", point_to_json(x)}, {"classes", p.classes}, {"matrix", p.matrix.str_rows()},
            {"determinant", p.determinant.str()}};
}

Json cmd_hecke_classify(const Options& o) {
    const DatumFile f = load(o);
    HeckeAlgebra h(hecke_section(f), HeckeOptions{false, false, o.max_group_order});
    Json results = Json::array();
    for (const auto& text : o.lambdas) {
        const auto c = classify_weight(h, parse_weight(text, h.rank()));
        Json weights = Json::array();
        for (std::size_t i = 0; i < c.weights.weights.size(); ++i)
            weights.push_back({{"weight", weight_json(c.weights.weights[i])}, {"multiplicity", c.weights.multiplicities[i]}});
        Json r{{"lambda", weight_json(c.lambda)},
               {"dimension", c.dimension},
               {"weights", weights},
               {"tempered", c.tempered},
               {"discrete_series", c.discrete_series},
               {"irreducible", c.irreducible}};
        if (h.gamma().elements.size() == 1) {
            r["trivial_line_invariant"] = c.trivial_line_invariant;
            r["sign_line_invariant"] = c.sign_line_invariant;
        }
        results.push_back(r);
    }
    Json j{{"results", results}};
    if (h.gamma().elements.size() == 1) {
        Json ones = Json::array();
        for (const auto& m : one_dimensional_modules(h)) {
            Weight w;
            for (std::size_t i = 0; i < h.rank(); ++i) w.push_back(GaussRat::from_cyc(m.image("x" + std::to_string(i + 1))(0, 0)));
            Json signs = Json::array();
            for (std::size_t i = 0; i < h.simple_count(); ++i) signs.push_back(m.image("N" + std::to_string(i + 1))(0, 0).str());
            const WeightReport rep{{w}, {1}};
            ones.push_back({{"signs", signs}, {"weight", weight_json(w)}, {"tempered", is_tempered(h, rep)},
                            {"discrete_series", is_discrete_series_weights(h, rep)}});
        }
        j["one_dimensional"] = ones;
    }
    return j;
}

Json cmd_hecke_tau(const Options& o, bool& ok) {
    const DatumFile f = load(o);
    HeckeAlgebra h(hecke_section(f), HeckeOptions{true, o.formal_r, o.max_group_order});
    Json roots = Json::array();
    ok = true;
    for (std::size_t i = 0; i < h.simple_count(); ++i) {
        const bool r = tau_square_check(h, i);
        ok = ok && r;
        roots.push_back({{"index", i + 1}, {"tau_squared_is_one", r}});
    }
    return {{"symbolic_k", true}, {"formal_r", o.formal_r}, {"variables", h.variable_names()},
            {"simple_roots", roots}, {"ok", ok}};
}

Json cmd_oracle_verify(const Options& o, bool& ok) {
    const DatumFile f = load(o);
    const BernsteinDatum& d = torus(f);
    const TorusPoint x = orbit_point(o, d);
    CertificateReport report;
    Json assoc{{"seed", o.seed}};
    std::optional<ExtendedQuotientFiber> fiber;
    try {
        fiber = extended_quotient_fiber(d, x, false);
    } catch (const Error& e) {
        report.fail(std::string("fiber construction: ") + e.what());
    }
    FiniteAlgebra a = finite_quotient_algebra(d, x);
    try {
        verify_associativity(a, o.seed);
    } catch (const InvariantViolation& e) {
        report.fail(std::string("associativity: ") + e.what());
    }
    assoc["exhaustive"] = a.associativity_exhaustive;
    assoc["triples"] = a.associativity_triples;
    std::size_t relations_ok = 0;
    if (fiber) {
        std::vector<FiniteModule> images;
        for (const auto& l : fiber->labels) {
            if (crossed_relation_check(d, l.module))
                ++relations_ok;
            else
                report.fail("label " + std::to_string(l.index) + " violates the crossed-product relations");
            images.push_back(quotient_images(d, x, l.module));
        }
        const CertificateReport c = completeness_certificate(a, images);
        for (const auto& msg : c.failures) report.fail(msg);
        report.center_dimension = c.center_dimension;
        report.module_count = c.module_count;
        report.sum_of_squares = c.sum_of_squares;
        report.algebra_dimension = c.algebra_dimension;
    }
    ok = report.ok;
    return {{"ok", report.ok},
            {"orbit", point_to_json(x)},
            {"algebra_dimension", a.dim},
            {"center_dimension", report.center_dimension},
            {"module_count", report.module_count},
            {"sum_of_squares", report.sum_of_squares},
            {"relations_ok", relations_ok},
            {"associativity", assoc},
            {"failures", report.failures}};
}

Json cmd_preset_list() {
    Json presets = Json::array();
    for (const auto& p : preset_list()) presets.push_back({{"name", p.name}, {"description", p.description}});
    return {{"presets", presets}};
}

void error_out(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation theory and homology of twisted crossed products over tori", "twh"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "check a datum; --canonical prints its canonical JSON");
    add_source(validate, o);
    add_format(validate, o);
    validate->add_flag("--canonical", o.canonical, "print the canonical datum file");

    auto* irr = app.add_subcommand("irr", "irreducible modules with central character the orbit of a point");
    auto* hh = app.add_subcommand("hh", "per-class Hochschild homology data");
    auto* hh0 = app.add_subcommand("hh0", "dimension of HH_0 specialized at an orbit");
    auto* hp = app.add_subcommand("hp", "periodic cyclic homology dimensions");
    auto* k = app.add_subcommand("k", "ranks of K_0 and K_1 tensored with C");
    auto* pairing = app.add_subcommand("pairing", "trace pairing matrix at an orbit");
    for (auto* sub : {irr, hh, hh0, hp, k, pairing}) {
        add_source(sub, o);
        add_format(sub, o);
    }
    for (auto* sub : {irr, hh0, pairing}) add_orbit(sub, o);
    k->add_flag("--breakdown", o.breakdown, "include the per-class contributions");

    auto* hecke = app.add_subcommand("hecke", "graded Hecke algebra computations");
    hecke->require_subcommand(1);
    auto* classify = hecke->add_subcommand("classify", "weights, temperedness and reducibility of I(lambda)");
    auto* tau = hecke->add_subcommand("tau-check", "tau_i^2 = 1 with symbolic parameters");
    for (auto* sub : {classify, tau}) {
        add_source(sub, o);
        add_format(sub, o);
    }
    classify->add_option("--lambda", o.lambdas, "weight \"a+bi,...\"; repeat for several")->required();
    tau->add_flag("--formal-r", o.formal_r, "keep r as a variable");

    auto* oracle = app.add_subcommand("oracle", "independent certificates");
    oracle->require_subcommand(1);
    auto* verify = oracle->add_subcommand("verify", "certify the fiber at an orbit against B / I B");
    add_source(verify, o);
    add_format(verify, o);
    add_orbit(verify, o);
    add_seed(verify, o);

    auto* preset = app.add_subcommand("preset", "shipped data");
    preset->require_subcommand(1);
    auto* list = preset->add_subcommand("list", "list presets");
    add_format(list, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_out(err, "usage", e.what());
        return kExitUsage;
    }

    try {
        bool ok = true;
        Json result;
        if (validate->parsed())
            result = cmd_validate(o);
        else if (irr->parsed())
            result = cmd_irr(o);
        else if (hh->parsed())
            result = cmd_hh(o);
        else if (hh0->parsed())
            result = cmd_hh0(o);
        else if (hp->parsed())
            result = cmd_hp(o);
        else if (k->parsed())
            result = cmd_k(o);
        else if (pairing->parsed())
            result = cmd_pairing(o);
        else if (classify->parsed())
            result = cmd_hecke_classify(o);
        else if (tau->parsed())
            result = cmd_hecke_tau(o, ok);
        else if (verify->parsed())
            result = cmd_oracle_verify(o, ok);
        else if (list->parsed())
            result = cmd_preset_list();
        emit(result, o, out);
        return ok ? kExitOk : kExitComputation;
    } catch (const UsageError& e) {
        error_out(err, "usage", e.what());
        return kExitUsage;
    } catch (const ValidationError& e) {
        error_out(err, "validation", e.what());
        return kExitValidation;
    } catch (const PreconditionError& e) {
        error_out(err, "validation", e.what());
        return kExitValidation;
    } catch (const Error& e) {
        error_out(err, "computation", e.what());
        return kExitComputation;
    }
}

}  // namespace twh

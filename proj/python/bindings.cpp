#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twh/cli.hpp"
#include "twh/crossed_product.hpp"
#include "twh/errors.hpp"
#include "twh/hecke.hpp"
#include "twh/homology.hpp"
#include "twh/io.hpp"
#include "twh/oracle.hpp"

namespace py = pybind11;
using namespace twh;

namespace {

const BernsteinDatum& torus(const DatumFile& f) {
    if (!f.datum) throw ValidationError("the datum has no torus section");
    return *f.datum;
}

const RootDatum& hecke_section(const DatumFile& f) {
    if (!f.hecke) throw ValidationError("the datum has no hecke section");
    return *f.hecke;
}

TorusPoint point_for(const BernsteinDatum& d, const std::string& text) {
    const TorusPoint x = parse_point(text);
    if (x.size() != d.rank()) throw ValidationError("orbit point has the wrong number of coordinates");
    return x;
}

std::vector<std::string> weight_strings(const Weight& w) {
    std::vector<std::string> out;
    for (const auto& c : w) out.push_back(c.str());
    return out;
}

py::dict ranks_dict(const RanksReport& r, const char* even, const char* odd) {
    py::dict out;
    out[even] = r.even;
    out[odd] = r.odd;
    py::list classes;
    for (const auto& c : r.breakdown) {
        py::dict d;
        d["representative"] = c.representative;
        d["even"] = c.even;
        d["odd"] = c.odd;
        classes.append(d);
    }
    out["classes"] = classes;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact representation theory and homology of twisted crossed products over tori";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
    py::register_exception<ComputationError>(m, "ComputationError", base.ptr());

    py::class_<DatumFile>(m, "Datum")
        .def_static(
            "preset", [](const std::string& name, const std::string& k) { return load_preset(name, parse_rat(k)); },
            py::arg("name"), py::arg("k") = "1")
        .def_static(
            "from_json", [](const std::string& text, std::size_t cap) { return datum_from_text(text, cap); },
            py::arg("text"), py::arg("max_group_order") = 10000)
        .def("to_json", [](const DatumFile& f) { return datum_to_json(f).dump(); })
        .def_readonly("name", &DatumFile::name)
        .def_property_readonly("has_torus", [](const DatumFile& f) { return f.datum.has_value(); })
        .def_property_readonly("has_hecke", [](const DatumFile& f) { return f.hecke.has_value(); })
        .def_property_readonly("rank", [](const DatumFile& f) { return torus(f).rank(); })
        .def_property_readonly("group_order", [](const DatumFile& f) { return torus(f).order(); })
        .def("__repr__", [](const DatumFile& f) { return "<twh.Datum " + f.name + ">"; });

    m.def("preset_names", [] {
        std::vector<std::string> out;
        for (const auto& p : preset_list()) out.push_back(p.name);
        return out;
    });

    m.def("regular_class_count", [](const DatumFile& f) { return regular_classes(torus(f).cocycle).size(); });

    m.def("k_ranks", [](const DatumFile& f) { return ranks_dict(ktheory_ranks(torus(f)), "K0_rank", "K1_rank"); });
    m.def("hp_dimensions", [](const DatumFile& f) { return ranks_dict(hp_dimensions(torus(f)), "HP0", "HP1"); });

    m.def("hh_summary", [](const DatumFile& f) {
        const HomologySummary s = f.datum ? hh_summary(*f.datum) : hecke_hh_dimensions(HeckeAlgebra(hecke_section(f)));
        py::dict out;
        out["variant"] = s.variant;
        out["generic_rank"] = s.generic_rank;
        out["invariant_cohomology"] = s.invariant_cohomology;
        py::list classes;
        for (const auto& c : s.classes) {
            py::dict d;
            d["representative"] = c.representative;
            d["fixed_dimension"] = c.fixed_dimension;
            d["component_count"] = c.component_count;
            d["twist_trivial"] = c.twist_trivial;
            d["generic_rank"] = c.generic_rank;
            d["invariant_cohomology"] = c.invariant_cohomology;
            classes.append(d);
        }
        out["classes"] = classes;
        return out;
    });

    m.def("hh0", [](const DatumFile& f, const std::string& orbit) {
        return hh0_specialization(torus(f), point_for(torus(f), orbit));
    }, py::arg("datum"), py::arg("orbit"));

    m.def("fiber_dimensions", [](const DatumFile& f, const std::string& orbit) {
        std::vector<std::size_t> dims;
        for (const auto& l : extended_quotient_fiber(torus(f), point_for(torus(f), orbit)).labels) dims.push_back(l.dimension);
        return dims;
    }, py::arg("datum"), py::arg("orbit"));

    m.def("trace_pairing", [](const DatumFile& f, const std::string& orbit) {
        const TracePairing p = trace_pairing_matrix(torus(f), point_for(torus(f), orbit));
        py::dict out;
        out["classes"] = p.classes;
        out["matrix"] = p.matrix.str_rows();
        out["determinant"] = p.determinant.str();
        return out;
    }, py::arg("datum"), py::arg("orbit"));

    m.def("hecke_classify", [](const DatumFile& f, const std::vector<std::string>& lambda) {
        HeckeAlgebra h(hecke_section(f));
        Weight w;
        for (const auto& s : lambda) w.push_back(GaussRat::parse(s));
        if (w.size() != h.rank()) throw ValidationError("weight has the wrong number of coordinates");
        const WeightClassification c = classify_weight(h, w);
        py::dict out;
        out["dimension"] = c.dimension;
        py::list weights;
        for (const auto& x : c.weights.weights) weights.append(weight_strings(x));
        out["weights"] = weights;
        out["multiplicities"] = c.weights.multiplicities;
        out["tempered"] = c.tempered;
        out["discrete_series"] = c.discrete_series;
        out["irreducible"] = c.irreducible;
        out["trivial_line_invariant"] = c.trivial_line_invariant;
        out["sign_line_invariant"] = c.sign_line_invariant;
        return out;
    }, py::arg("datum"), py::arg("weight"));

    m.def("tau_check", [](const DatumFile& f, bool formal_r) {
        HeckeAlgebra h(hecke_section(f), HeckeOptions{true, formal_r, 10000});
        for (std::size_t i = 0; i < h.simple_count(); ++i)
            if (!tau_square_check(h, i)) return false;
        return true;
    }, py::arg("datum"), py::arg("formal_r") = false);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a command line; returns (exit code, stdout text, stderr text).");
}

#include "angle_persist/emit.hpp"
#include "angle_persist/hilbert.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace angp;

namespace {

std::pair<long, long> rational_pair(const Rational& x) {
    Rational c(x);
    c.canonicalize();
    return {c.get_num().get_si(), c.get_den().get_si()};
}

Rational make_rational(long num, long den) { return Rational(num, den); }

}  // namespace

PYBIND11_MODULE(_angle_persist, m) {
    m.doc() = "Refined Novikov-Betti invariants of angle-valued maps";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<TerminationError>(m, "TerminationError");
    py::register_exception<CertificateError>(m, "CertificateError");

    py::class_<FieldDesc>(m, "Field")
        .def(py::init([](const std::string& spec) { return parse_field(spec); }))
        .def_property_readonly("name", &FieldDesc::name)
        .def("__repr__", [](const FieldDesc& f) { return "Field(" + f.name() + ")"; });

    py::class_<ComplexWithMap>(m, "Complex")
        .def_static("from_json", [](const std::string& text) {
            ComplexWithMap c = load_complex(text);
            c.validate();
            return c;
        })
        .def_static("from_file", [](const std::string& path) {
            ComplexWithMap c = load_complex_file(path);
            c.validate();
            return c;
        })
        .def_property_readonly("dim", &ComplexWithMap::dim)
        .def("count", &ComplexWithMap::count)
        .def("critical_turns", [](const ComplexWithMap& c) {
            CriticalTurns ct = critical_turns(c);
            std::vector<std::pair<long, long>> vals;
            for (const auto& v : ct.values) vals.push_back(rational_pair(v));
            return py::make_tuple(vals, rational_pair(ct.min_gap));
        })
        .def("to_json", &complex_to_json);

    py::class_<NovikovInvariants>(m, "NovikovInvariants")
        .def_readonly("r", &NovikovInvariants::r)
        .def_readonly("betti", &NovikovInvariants::free_rank)
        .def_readonly("torsion_dim", &NovikovInvariants::torsion_dim)
        .def_property_readonly("invariant_factors", [](const NovikovInvariants& inv) {
            std::vector<std::string> out;
            for (const auto& d : inv.invariant_factors) out.push_back(d.str());
            return out;
        });

    py::class_<SupportPoint>(m, "SupportPoint")
        .def_property_readonly("a", [](const SupportPoint& p) { return rational_pair(p.a); })
        .def_property_readonly("b", [](const SupportPoint& p) { return rational_pair(p.b); })
        .def_readonly("multiplicity", &SupportPoint::multiplicity)
        .def_property_readonly("z", &SupportPoint::z);

    py::class_<Configuration>(m, "Configuration")
        .def_readonly("r", &Configuration::r)
        .def_readonly("betti", &Configuration::betti)
        .def_readonly("window_radius", &Configuration::window_radius)
        .def_readonly("points", &Configuration::points)
        .def("total_multiplicity", &Configuration::total_multiplicity)
        .def("char_poly", [](const Configuration& c) { return char_poly(c); });

    py::class_<ModuleRefinement>(m, "ModuleRefinement")
        .def_readonly("r", &ModuleRefinement::r)
        .def_readonly("beta", &ModuleRefinement::beta)
        .def_readonly("split_certified", &ModuleRefinement::split_certified)
        .def_readonly("direct_sum_certified", &ModuleRefinement::direct_sum_certified)
        .def_property_readonly("entries", [](const ModuleRefinement& m_) {
            py::list out;
            for (const auto& e : m_.entries) {
                py::dict d;
                d["a"] = rational_pair(e.point.a);
                d["b"] = rational_pair(e.point.b);
                d["multiplicity"] = e.point.multiplicity;
                d["quotient_rank"] = e.quotient_rank;
                out.append(d);
            }
            return out;
        });

    m.def(
        "betti",
        [](const ComplexWithMap& c, long r, const std::string& field) {
            return novikov_invariants(c, r, parse_field(field));
        },
        py::arg("complex"), py::arg("r"), py::arg("field") = "q");
    m.def(
        "configuration",
        [](const ComplexWithMap& c, long r, const std::string& field, long max_periods) {
            ConfigOptions opts;
            opts.max_periods = max_periods;
            return configuration(c, parse_field(field), r, opts);
        },
        py::arg("complex"), py::arg("r"), py::arg("field") = "q", py::arg("max_periods") = 0);
    m.def(
        "module_refinement",
        [](const ComplexWithMap& c, long r, const std::string& field) {
            return module_refinement(c, parse_field(field), r, {});
        },
        py::arg("complex"), py::arg("r"), py::arg("field") = "q");
    m.def("collision_distance", [](const Configuration& c1, const Configuration& c2) {
        CollisionDistance d = collision_distance(c1, c2);
        return py::make_tuple(d.infinite, rational_pair(d.value));
    });
    m.def(
        "vn_dimensions",
        [](const ModuleRefinement& ref, long ngrid) {
            std::vector<double> out;
            for (const auto& e : ref.entries)
                out.push_back(vn_dimension(PointwiseProjector{e.L, e.Lprime}, ngrid).value);
            return out;
        },
        py::arg("refinement"), py::arg("ngrid") = 256);
    m.def("configuration_json",
          [](const Configuration& c) { return configuration_json({c}); });
    m.def("configuration_svg",
          [](const Configuration& c) { return configuration_svg({c}); });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degseq/analysis.hpp"
#include "degseq/errors.hpp"
#include "degseq/hajos.hpp"
#include "degseq/io.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realizers.hpp"

namespace py = pybind11;
using namespace degseq;

namespace {

// Witnesses and reports cross the boundary as JSON text; the Python side
// turns them into dicts.
std::string witness_text(const StarSubdivisionWitness& w) { return to_json(w).dump(); }

DegreeSequence seq(const std::vector<int>& d) { return DegreeSequence(d); }

py::tuple witnessed(const WitnessedGraph& w) { return py::make_tuple(w.graph, witness_text(w.witness)); }

} // namespace

PYBIND11_MODULE(_degseq, m) {
    m.doc() = "degree-sequence certification core";

    auto base = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    (void)base;

    py::class_<SimpleGraph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def("add_edge", &SimpleGraph::add_edge)
        .def("has_edge", &SimpleGraph::has_edge)
        .def("degree", &SimpleGraph::degree)
        .def_property_readonly("order", &SimpleGraph::order)
        .def("edges", &SimpleGraph::edges)
        .def("degrees", [](const SimpleGraph& g) { return g.degree_list(); })
        .def("graph6", [](const SimpleGraph& g) { return to_graph6(g); })
        .def("dot", [](const SimpleGraph& g) { return to_dot(g); })
        .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__repr__", [](const SimpleGraph& g) { return "Graph(" + to_graph6(g) + ")"; });

    m.def("parse_sequence", [](const std::string& s) { return parse_sequence(s).degrees(); });
    m.def("is_graphic", [](const std::vector<int>& d) { return is_graphic(seq(d)); });
    m.def("rao_omega_at_least", [](const std::vector<int>& d, int k) { return rao_omega_at_least(seq(d), k); });
    m.def("omega_of_sequence", [](const std::vector<int>& d) { return omega_of_sequence(seq(d)); });
    m.def("yinli_sufficient", [](const std::vector<int>& d, int k) { return yinli_sufficient(seq(d), k); });
    m.def("largecl_check", [](const std::vector<int>& d, int k) { return largecl_check(seq(d), k); });
    m.def("classify_basic_profile", [](const std::vector<int>& d) {
        const auto p = classify_basic_profile(seq(d));
        return py::make_tuple(std::string(to_string(p.verdict)), p.m ? py::object(py::int_(*p.m)) : py::none());
    });

    m.def("realize_any", [](const std::vector<int>& d) { return realize_any(seq(d)); });
    m.def("realize_tree", [](const std::vector<int>& d) { return realize_tree(std::span<const int>(d)); });
    m.def("realize_low_degree", &realize_low_degree, py::arg("n"), py::arg("e"));
    m.def("realize_with_clique", [](const std::vector<int>& d, int k) { return realize_with_clique(seq(d), k); });
    m.def("realize_bipartite_with_matching", [](const std::vector<int>& a, const std::vector<int>& b) {
        auto r = realize_bipartite_with_matching(a, b);
        return py::make_tuple(r.graph, r.matching);
    });
    m.def("count_realizations", [](const std::vector<int>& d, bool up_to_isomorphism) {
        return enumerate_realizations(seq(d), [](const SimpleGraph&) { return true; }, {up_to_isomorphism, {}});
    }, py::arg("d"), py::arg("up_to_isomorphism") = false);

    m.def("chromatic_number", [](const SimpleGraph& g) { return chromatic_number(g); });
    m.def("clique_number", &clique_number);
    m.def("maximum_matching", &maximum_matching);
    m.def("is_hypomatchable", &is_hypomatchable);
    m.def("h1_of_graph", [](const SimpleGraph& g) {
        const auto h = h1_of_graph(g);
        return py::make_tuple(h.order, h.witness ? py::object(py::str(witness_text(*h.witness))) : py::none());
    });
    m.def("verify_witness", [](const SimpleGraph& g, const std::string& witness_json) {
        const auto check = verify_witness(g, witness_from_json(Json::parse(witness_json)));
        return py::make_tuple(check.ok(), std::string(to_string(check.reason)));
    });

    m.def("build_basic_witness", [](const std::vector<int>& d) {
        const auto r = build_basic_witness(seq(d));
        return py::make_tuple(r.realization.graph, witness_text(r.realization.witness), to_json(r.plan).dump());
    });
    m.def("witness_pipeline", [](const SimpleGraph& g) {
        const auto r = witness_pipeline(g);
        return py::make_tuple(witnessed(r.realization), r.chi);
    });

    m.def("chi_of_sequence", [](const std::vector<int>& d) { return chi_of_sequence(seq(d)); });
    m.def("h1_of_sequence", [](const std::vector<int>& d) { return h1_of_sequence(seq(d)); });
    m.def("check_bounds", [](std::optional<int> chi, std::optional<int> omega, int delta, std::optional<int> h1) {
        SequenceStats s;
        s.delta_max = delta;
        if (chi) s.chi = Sourced<int>{*chi, StatSource::OracleEnumeration};
        if (omega) s.omega = Sourced<int>{*omega, StatSource::RaoExact};
        if (h1) s.h1 = Sourced<int>{*h1, StatSource::OracleEnumeration};
        return to_json(check_bounds(s)).dump();
    }, py::arg("chi"), py::arg("omega"), py::arg("delta"), py::arg("h1") = py::none());
    m.def("sweep", [](int n_max, const std::vector<std::string>& names) {
        std::set<SweepCheck> checks;
        for (const auto& name : names) checks.insert(parse_sweep_check(name));
        SweepReport r;
        {
            py::gil_scoped_release release;
            r = sweep(n_max, checks);
        }
        return to_json(r).dump();
    });
}

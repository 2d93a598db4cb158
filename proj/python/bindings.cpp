#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bipdom/cnf.hpp"
#include "bipdom/domset.hpp"
#include "bipdom/error.hpp"
#include "bipdom/graph.hpp"
#include "bipdom/graph_io.hpp"
#include "bipdom/perturb.hpp"
#include "bipdom/reduction.hpp"
#include "bipdom/verifier.hpp"

namespace py = pybind11;
using namespace bipdom;

namespace {

ReductionKind kind_from(const std::string& name) {
    auto k = parse_kind(name);
    if (!k) throw py::value_error("unknown reduction kind: " + name);
    return *k;
}

std::vector<Edge> edges_from(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Edge> out;
    for (const auto& [a, b] : pairs) out.emplace_back(a, b);
    return out;
}

py::list edges_to_py(const std::vector<Edge>& edges) {
    py::list out;
    for (const auto& e : edges) out.append(py::make_tuple(e.first, e.second));
    return out;
}

CnfInstance instance_from(int n, const std::vector<std::vector<int>>& clauses) {
    std::vector<Clause> cs;
    for (const auto& c : clauses) {
        if (c.size() != 3) throw Error(ErrorCode::ClauseArityError, "clause must have exactly 3 literals");
        cs.push_back({Literal::from_dimacs(c[0]), Literal::from_dimacs(c[1]), Literal::from_dimacs(c[2])});
    }
    return CnfInstance(n, std::move(cs));
}

std::vector<bool> assignment_values(const Assignment& t) {
    std::vector<bool> v;
    for (int i = 1; i <= t.size(); ++i) v.push_back(t.value(i));
    return v;
}

py::dict perturb_to_py(const PerturbResult& r) {
    py::dict d;
    d["value"] = describe(r);
    d["found"] = r.found();
    d["base"] = r.base;
    d["witness"] = edges_to_py(r.witness);
    return d;
}

} // namespace

PYBIND11_MODULE(_bipdom, m) {
    m.doc() = "Exact domination-family parameters and 3SAT gadget reductions";

    // Message carries the stable error-code name first, as on the CLI.
    static PyObject* error_type = py::exception<Error>(m, "BipdomError", PyExc_ValueError).inc_ref().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&Graph::from_edge_list), py::arg("vertices"), py::arg("edges"))
        .def_static("parse", &parse_graph_text)
        .def("to_text", &write_graph_text)
        .def("to_dot", &to_dot)
        .def_property_readonly("vertices", &Graph::vertices)
        .def_property_readonly("edges", [](const Graph& g) { return edges_to_py(g.edges()); })
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    m.def("open_neighbors", &open_neighbors);
    m.def("closed_neighbors", &closed_neighbors);
    m.def("is_bipartite", [](const Graph& g) { return is_bipartite(g).bipartite; });
    m.def("remove_edges", [](const Graph& g, const std::vector<std::pair<std::string, std::string>>& e) {
        return remove_edges(g, edges_from(e));
    });
    m.def("add_edges", [](const Graph& g, const std::vector<std::pair<std::string, std::string>>& e) {
        return add_edges(g, edges_from(e));
    });
    m.def("complement_edges", [](const Graph& g) { return edges_to_py(complement_edges(g)); });
    m.def("isolated_vertices", &isolated_vertices);

    py::class_<CnfInstance>(m, "CnfInstance")
        .def(py::init(&instance_from), py::arg("num_vars"), py::arg("clauses"))
        .def_static("parse_dimacs", &parse_dimacs)
        .def("to_dimacs", &to_dimacs)
        .def_property_readonly("num_vars", &CnfInstance::num_vars)
        .def_property_readonly("num_clauses", &CnfInstance::num_clauses)
        .def("__eq__", [](const CnfInstance& a, const CnfInstance& b) { return a == b; });

    m.def("solve_sat", [](const CnfInstance& inst) -> std::optional<std::vector<bool>> {
        auto t = solve_sat(inst);
        if (!t) return std::nullopt;
        return assignment_values(*t);
    });
    m.def("evaluate", [](const CnfInstance& inst, const std::vector<bool>& values) {
        return evaluate(inst, Assignment(values));
    });
    m.def("random_instance", &random_instance, py::arg("n"), py::arg("m"), py::arg("seed"));

    m.def("is_dominating_set", [](const Graph& g, const std::vector<std::string>& d) { return is_dominating_set(g, d); });
    m.def("is_total_dominating_set",
          [](const Graph& g, const std::vector<std::string>& d) { return is_total_dominating_set(g, d); });
    m.def("domination_number", [](const Graph& g) {
        auto r = domination_number(g);
        return py::make_tuple(r.value, r.witness);
    });
    m.def("total_domination_number", [](const Graph& g) {
        auto r = total_domination_number(g);
        return py::make_tuple(r.value, r.witness);
    });
    m.def("enumerate_minimum_sets", &enumerate_minimum_sets, py::arg("graph"), py::arg("total") = false,
          py::arg("cap") = kDefaultEnumerationCap);

    m.def("bondage_number", [](const Graph& g, std::optional<std::size_t> k) { return perturb_to_py(bondage_number(g, k)); },
          py::arg("graph"), py::arg("max_k") = py::none());
    m.def("total_bondage_number",
          [](const Graph& g, std::optional<std::size_t> k) { return perturb_to_py(total_bondage_number(g, k)); },
          py::arg("graph"), py::arg("max_k") = py::none());
    m.def("reinforcement_number",
          [](const Graph& g, std::optional<std::size_t> k) { return perturb_to_py(reinforcement_number(g, k)); },
          py::arg("graph"), py::arg("max_k") = py::none());
    m.def("total_reinforcement_number",
          [](const Graph& g, std::optional<std::size_t> k) { return perturb_to_py(total_reinforcement_number(g, k)); },
          py::arg("graph"), py::arg("max_k") = py::none());

    py::class_<ReductionOutput>(m, "ReductionOutput")
        .def_property_readonly("kind", [](const ReductionOutput& r) { return std::string(kind_name(r.kind)); })
        .def_readonly("graph", &ReductionOutput::graph)
        .def_property_readonly("n", &ReductionOutput::n)
        .def_property_readonly("m", &ReductionOutput::m)
        .def_property_readonly("roles", [](const ReductionOutput& r) {
            py::dict d;
            for (std::size_t i = 0; i < r.graph.vertex_count(); ++i)
                d[py::str(r.graph.label(i))] = std::string(role_name(r.roles[i]));
            return d;
        });

    m.def("reduce", [](const std::string& kind, const CnfInstance& inst) { return build(kind_from(kind), inst); },
          py::arg("kind"), py::arg("instance"));
    m.def("assignment_to_witness", [](const ReductionOutput& out, const std::vector<bool>& values) {
        auto w = assignment_to_witness(out, Assignment(values));
        py::object edge = py::none();
        if (w.added_edge) edge = py::make_tuple(w.added_edge->first, w.added_edge->second);
        return py::make_tuple(w.vertices, edge);
    });
    m.def("witness_to_assignment", [](const ReductionOutput& out, const std::vector<std::string>& d) {
        return assignment_values(witness_to_assignment(out, d));
    });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_property_readonly("passed", &VerificationReport::pass)
        .def_readonly("sat", &VerificationReport::sat)
        .def_readonly("gamma", &VerificationReport::gamma)
        .def_property_readonly("perturbation", [](const VerificationReport& r) { return describe(r.perturbation); })
        .def("to_json", [](const VerificationReport& r) { return report_to_json(r); })
        .def("to_text", &report_to_text);

    m.def(
        "verify",
        [](const std::string& kind, const CnfInstance& inst, bool deep, std::size_t max_k) {
            py::gil_scoped_release release;
            return verify(kind_from(kind), inst, VerifyOptions{deep, max_k, kDefaultEnumerationCap});
        },
        py::arg("kind"), py::arg("instance"), py::arg("deep") = false, py::arg("max_k") = 2);
    m.def(
        "fuzz",
        [](const std::string& kind, int n, int m_, std::size_t trials, std::uint64_t seed, bool deep) {
            py::gil_scoped_release release;
            return fuzz(kind_from(kind), n, m_, trials, seed, VerifyOptions{deep, 2, kDefaultEnumerationCap});
        },
        py::arg("kind"), py::arg("n"), py::arg("m"), py::arg("trials"), py::arg("seed"), py::arg("deep") = false);
}

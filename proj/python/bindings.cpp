#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pfactor/families.hpp"
#include "pfactor/graph_io.hpp"
#include "pfactor/harness.hpp"
#include "pfactor/parity_factor.hpp"
#include "pfactor/polynomial.hpp"
#include "pfactor/serialize.hpp"
#include "pfactor/spectral.hpp"

namespace py = pybind11;
using namespace pfactor;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

FactorMethod parse_method(const std::string& name) {
    if (name == "lovasz") return FactorMethod::Lovasz;
    if (name == "matching") return FactorMethod::Matching;
    if (name == "enum") return FactorMethod::Enumeration;
    throw std::invalid_argument("method must be lovasz, matching or enum");
}

py::object big_to_python(const BigInt& v) {
    std::ostringstream text;
    text << v;
    return py::module_::import("builtins").attr("int")(text.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral conditions for (a,b)-parity factors";
    m.attr("MAX_VERTICES") = kMaxVertices;

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                 Graph::Builder b(n);
                 for (const auto& [u, v] : edges) b.add_edge(u, v);
                 return b.build();
             }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); }, py::arg("text"))
        .def("to_graph6", &write_graph6)
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<std::size_t, std::size_t>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

    m.def("complete", &complete, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("star", &star, py::arg("leaves"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("s"), py::arg("t"));
    m.def("petersen", &petersen);
    m.def("h_extremal", &h_extremal, py::arg("n"), py::arg("a"));
    m.def("l_family", &l_family, py::arg("n"), py::arg("s"));
    m.def(
        "clique_join", [](std::size_t s, const std::vector<std::size_t>& parts) { return clique_join(s, parts); },
        py::arg("s"), py::arg("parts"));
    m.def("recognize_h_extremal", &recognize_h_extremal, py::arg("g"), py::arg("a"));

    m.def(
        "spectral_radius", [](const Graph& g, double tol) { return to_python(to_json(spectral_radius(g, tol))); },
        py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def(
        "spectrum", [](const Graph& g) { return full_spectrum(g).values; }, py::arg("g"));
    m.def(
        "char_poly",
        [](const Graph& g) {
            const IntPolynomial p = char_poly_exact(g);
            py::list out;
            for (const BigInt& c : p.coefficients()) out.append(big_to_python(c));
            return out;
        },
        py::arg("g"));
    m.def(
        "compare_radius",
        [](const Graph& g, const Graph& h) {
            const RadiusComparison c = compare_radius(g, h);
            return py::make_tuple(std::string(to_string(c.order)), std::string(to_string(c.method)));
        },
        py::arg("g"), py::arg("h"));
    m.def("kopr_threshold", &kopr_threshold, py::arg("k"), py::arg("b"));
    m.def("theorem_n_bound", &theorem_n_bound, py::arg("a"), py::arg("b"));

    m.def(
        "decide",
        [](const Graph& g, int a, int b, const std::string& method) {
            return to_python(to_json(decide(g, FactorSpec::make(a, b), parse_method(method))));
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("method") = "matching");
    m.def(
        "eta",
        [](const Graph& g, const std::vector<std::size_t>& s, const std::vector<std::size_t>& t, int a, int b) {
            VertexSet sv;
            VertexSet tv;
            for (std::size_t v : s) sv.insert(v);
            for (std::size_t v : t) tv.insert(v);
            return to_python(to_json(make_certificate(g, sv, tv, FactorSpec::make(a, b))));
        },
        py::arg("g"), py::arg("S"), py::arg("T"), py::arg("a"), py::arg("b"));

    m.def(
        "verify_theorem",
        [](int a, int b, std::size_t n, const std::string& mode, std::uint64_t seed, std::uint64_t samples,
           std::size_t jobs) {
            ScanOptions options;
            options.mode = parse_scan_mode(mode);
            options.seed = seed;
            options.samples = samples;
            options.jobs = jobs;
            ScanReport report;
            {
                py::gil_scoped_release release;
                report = verify_main_theorem(a, b, n, options);
            }
            return to_python(report.to_json(false));
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("mode") = "exhaustive", py::arg("seed") = 1,
        py::arg("samples") = 10000, py::arg("jobs") = 1);
    m.def(
        "verify_lemma_no_factor",
        [](int a, int b, const std::vector<std::size_t>& ns) {
            return to_python(verify_lemma_no_factor(a, b, ns).to_json(false));
        },
        py::arg("a"), py::arg("b"), py::arg("n"));
    m.def(
        "verify_zhw",
        [](std::size_t s, std::size_t n, std::size_t q_max) { return to_python(verify_zhw(s, n, q_max).to_json(false)); },
        py::arg("s"), py::arg("n"), py::arg("q_max") = 4);
}

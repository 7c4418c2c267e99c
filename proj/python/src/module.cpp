#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sqbound/bound_context.hpp"
#include "sqbound/bounds.hpp"
#include "sqbound/connectivity.hpp"
#include "sqbound/error.hpp"
#include "sqbound/families.hpp"
#include "sqbound/graph.hpp"
#include "sqbound/graph_io.hpp"
#include "sqbound/spectral.hpp"
#include "sqbound/verifier.hpp"

namespace py = pybind11;
using namespace sqbound;

namespace {

using Pair = std::pair<int, int>;

Pair to_pair(const Edge& e) { return {e.u, e.v}; }

std::vector<std::vector<double>> to_rows(const SymMatrix& m) {
    std::vector<std::vector<double>> out;
    for (int i = 0; i < m.order(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

SymMatrix named_matrix(const Graph& g, const std::string& kind) {
    if (kind == "Q") return signless_laplacian_matrix(g);
    if (kind == "L") return laplacian_matrix(g);
    if (kind == "A") return adjacency_matrix(g);
    throw InvalidArgument("matrix kind must be 'Q', 'L' or 'A'");
}

SolverOptions solver(double tol) { return SolverOptions{tol, SolverOptions{}.max_iterations}; }

std::vector<FamilySpec> parse_specs(const std::vector<std::string>& specs) {
    std::vector<FamilySpec> out;
    for (const auto& s : specs) out.push_back(parse_family_spec(s));
    return out;
}

py::dict tally(const CheckTally& t) {
    py::dict d;
    d["pass"] = t.pass;
    d["tight"] = t.tight;
    d["fail"] = t.fail;
    d["skip"] = t.skipped;
    return d;
}

py::dict table_row(const Table1Row& row) {
    py::dict d;
    d["graph"] = row.graph;
    d["subgraph"] = row.subgraph;
    d["computed"] = row.computed;
    if (row.computed) {
        d["gap"] = row.gap;
        d["eq3"] = row.eq3;
        d["eq4"] = row.eq4;
        d["theorems_hold"] = row.theorems_hold;
    }
    d["printed_gap"] = row.printed_gap;
    d["printed_eq3"] = row.printed_eq3;
    d["printed_eq4"] = row.printed_eq4;
    d["gap_match"] = row.gap_match;
    d["eq3_match"] = row.eq3_match;
    d["eq4_match"] = row.eq4_match;
    d["known_discrepancy"] = row.known_discrepancy;
    d["gap_matches"] = row.gap_matches;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Signless Laplacian spectral gap bounds for maximal subgraphs of regular graphs";

    // Translators run newest first, so the base class is registered before its subclasses.
    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<DisconnectedGraph>(m, "DisconnectedGraph", error.ptr());
    py::register_exception<NumericalFailure>(m, "NumericalFailure", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Pair>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges") = std::vector<Pair>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            const auto span = g.neighbors(v);
            return std::vector<Vertex>(span.begin(), span.end());
        })
        .def("has_edge", &Graph::has_edge)
        .def("edges", [](const Graph& g) {
            std::vector<Pair> out;
            for (const Edge& e : g.edges()) out.push_back(to_pair(e));
            return out;
        })
        .def("degrees", &Graph::degrees)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def_property_readonly("min_degree", &Graph::min_degree)
        .def("is_regular", &Graph::is_regular)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("diameter", &diameter);
    m.def("is_connected", &is_connected);
    m.def("is_bipartite", &is_bipartite);
    m.def("connected_components", &connected_components);
    m.def("delete_edge", [](const Graph& g, Pair e) { return delete_edge(g, Edge(e.first, e.second)); });
    m.def("add_edge", [](const Graph& g, Pair e) { return add_edge(g, Edge(e.first, e.second)); });

    m.def("parse_graph6", &parse_graph6);
    m.def("to_graph6", &to_graph6);
    m.def("parse_edgelist", &parse_edgelist);
    m.def("to_edgelist", &to_edgelist);

    m.def("matrix", [](const Graph& g, const std::string& kind) { return to_rows(named_matrix(g, kind)); },
          py::arg("g"), py::arg("kind") = "Q");
    m.def("dense_spectrum", [](const Graph& g, const std::string& kind) {
        return dense_spectrum_oracle(named_matrix(g, kind));
    }, py::arg("g"), py::arg("kind") = "Q");
    m.def("q_max", [](const Graph& g, double tol) { return q_max(g, solver(tol)); }, py::arg("g"), py::arg("tol") = 1e-10);
    m.def("mu_max", [](const Graph& g, double tol) { return mu_max(g, solver(tol)); }, py::arg("g"), py::arg("tol") = 1e-10);
    m.def("rho_max", [](const Graph& g, double tol) { return rho_max(g, solver(tol)); }, py::arg("g"), py::arg("tol") = 1e-10);
    m.def("perron_vector", [](const Graph& g, double tol) {
        const SpectralResult r = perron_vector(g, solver(tol));
        py::dict d;
        d["value"] = r.value;
        d["vector"] = r.vector;
        d["residual"] = r.residual;
        d["iterations"] = r.iterations;
        d["max_vertex"] = r.max_vertex;
        return d;
    }, py::arg("g"), py::arg("tol") = 1e-10);

    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("is_k_connected", &is_k_connected);
    m.def("max_vertex_disjoint_paths", &max_vertex_disjoint_paths);
    m.def("shortest_disjoint_paths", &shortest_disjoint_paths);

    m.def("bound_thm1", &bound_thm1, py::arg("n"), py::arg("diameter"));
    m.def("bound_thm2", &bound_thm2, py::arg("n"), py::arg("max_degree"), py::arg("k"));
    m.def("bound_eq1", &bound_eq1, py::arg("n"), py::arg("diameter"));
    m.def("bound_eq2", &bound_eq2, py::arg("n"), py::arg("max_degree"), py::arg("edges"), py::arg("k"));
    m.def("thresholds", [](int n, int delta, int d) {
        const Thresholds t = thresholds(n, delta, d);
        return std::pair<double, double>{t.hi, t.lo};
    }, py::arg("n"), py::arg("max_degree"), py::arg("diameter"));
    m.def("cycle_case_bound", &cycle_case_bound);
    m.def("lemma1_gap", &lemma1_gap, py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"));
    m.def("bound_context", [](const Graph& g) {
        const BoundContext c = bound_context(g);
        py::dict d;
        d["n"] = c.n;
        d["max_degree"] = c.max_degree;
        d["min_degree"] = c.min_degree;
        d["diameter"] = c.diameter;
        d["connectivity"] = c.connectivity;
        d["edges"] = c.edges;
        return d;
    });
    m.def("bound_report", [](int n, int delta, int d, int k, std::optional<int> edges, std::optional<int> min_degree) {
        const BoundContext ctx{n, delta, min_degree.value_or(delta), d, k, edges.value_or(n * delta / 2)};
        const BoundReport r = bound_report(ctx);
        py::dict out;
        out["eq3"] = r.eq3;
        out["eq4"] = r.eq4;
        out["eq1"] = r.eq1;
        out["eq2"] = r.eq2;
        if (r.threshold) out["thresholds"] = std::pair<double, double>{r.threshold->hi, r.threshold->lo};
        else out["thresholds"] = py::none();
        out["dominant"] = to_string(r.dominant);
        out["verdict"] = to_string(r.verdict);
        return out;
    }, py::arg("n"), py::arg("max_degree"), py::arg("diameter"), py::arg("k"), py::arg("edges") = py::none(),
       py::arg("min_degree") = py::none());

    m.def("generate", [](const std::string& spec, std::uint64_t seed) { return generate(parse_family_spec(spec), seed); },
          py::arg("spec"), py::arg("seed") = 0);
    m.def("random_regular_graph", &random_regular_graph, py::arg("n"), py::arg("degree"), py::arg("seed"),
          py::arg("max_attempts") = 100'000);
    m.def("maximal_subgraphs", [](const Graph& g) {
        std::vector<std::pair<Pair, Graph>> out;
        for (auto& [e, h] : maximal_subgraphs(g)) out.emplace_back(to_pair(e), std::move(h));
        return out;
    });
    m.def("is_isomorphic", &is_isomorphic);
    m.def("connected_regular_graphs", &connected_regular_graphs);

    py::class_<VerificationRecord>(m, "VerificationRecord")
        .def_readonly("graph_id", &VerificationRecord::graph_id)
        .def_property_readonly("deleted_edge", [](const VerificationRecord& r) { return to_pair(r.deleted_edge); })
        .def_readonly("n", &VerificationRecord::n)
        .def_readonly("max_degree", &VerificationRecord::max_degree)
        .def_readonly("diameter", &VerificationRecord::diameter)
        .def_readonly("connectivity", &VerificationRecord::connectivity)
        .def_readonly("q", &VerificationRecord::q)
        .def_readonly("mu", &VerificationRecord::mu)
        .def_readonly("gap", &VerificationRecord::gap)
        .def_readonly("mu_gap", &VerificationRecord::mu_gap)
        .def_readonly("eq3", &VerificationRecord::eq3)
        .def_readonly("eq4", &VerificationRecord::eq4)
        .def_property_readonly("thm1", [](const VerificationRecord& r) { return to_string(r.thm1); })
        .def_property_readonly("thm2", [](const VerificationRecord& r) { return to_string(r.thm2); })
        .def_property_readonly("cor1", [](const VerificationRecord& r) { return to_string(r.cor1); })
        .def_property_readonly("cor2", [](const VerificationRecord& r) { return to_string(r.cor2); })
        .def_property_readonly("dominant", [](const VerificationRecord& r) { return to_string(r.dominant); })
        .def_readonly("threshold_consistent", &VerificationRecord::threshold_consistent)
        .def_readonly("subgraph_connected", &VerificationRecord::subgraph_connected)
        .def_readonly("subgraph_bipartite", &VerificationRecord::subgraph_bipartite)
        .def_readonly("max_vertex", &VerificationRecord::max_vertex)
        .def_readonly("menger_paths", &VerificationRecord::menger_paths)
        .def_readonly("path_vertex_total", &VerificationRecord::path_vertex_total)
        .def_readonly("path_budget", &VerificationRecord::path_budget)
        .def("violated", &VerificationRecord::violated)
        .def("__repr__", [](const VerificationRecord& r) {
            std::ostringstream out;
            out << "<VerificationRecord " << r.graph_id << " -(" << r.deleted_edge.u << "," << r.deleted_edge.v
                << ") gap=" << r.gap << ">";
            return out.str();
        });

    m.def("verify_graph", [](const Graph& g, const std::string& id, double tol) {
        VerifyOptions options;
        options.solver = solver(tol);
        return verify_graph(g, id, options);
    }, py::arg("g"), py::arg("graph_id") = "graph", py::arg("tol") = 1e-10);

    m.def("default_campaign_specs", [](std::uint64_t seed) {
        std::vector<std::string> out;
        for (const auto& s : default_campaign_specs(seed)) out.push_back(to_string(s));
        return out;
    }, py::arg("seed") = 0);

    m.def("campaign", [](const std::vector<std::string>& specs, std::uint64_t seed, double tol) {
        VerifyOptions options;
        options.solver = solver(tol);
        const CampaignSummary s = campaign(parse_specs(specs), options, seed);
        py::dict d;
        d["records"] = s.records;
        py::list skipped;
        for (const auto& sk : s.skipped) skipped.append(py::make_tuple(sk.spec, sk.reason));
        d["skipped"] = skipped;
        d["graphs"] = s.graphs;
        d["thm1"] = tally(s.thm1);
        d["thm2"] = tally(s.thm2);
        d["cor1"] = tally(s.cor1);
        d["cor2"] = tally(s.cor2);
        d["threshold_inconsistent"] = s.threshold_inconsistent;
        d["min_ratio_eq3"] = s.min_ratio_eq3;
        d["min_ratio_eq4"] = s.min_ratio_eq4;
        d["violations"] = s.violations();
        return d;
    }, py::arg("specs"), py::arg("seed") = 0, py::arg("tol") = 1e-10);

    m.def("reproduce_table1", [](double tol) {
        const Table1 t = reproduce_table1(solver(tol));
        py::dict d;
        py::list exact, candidates, printed;
        for (const auto& r : t.exact_rows) exact.append(table_row(r));
        for (const auto& r : t.candidate_rows) candidates.append(table_row(r));
        for (const auto& r : t.printed_candidates) printed.append(table_row(r));
        d["exact_rows"] = exact;
        d["candidate_rows"] = candidates;
        d["printed_candidates"] = printed;
        d["tolerance"] = Table1::tolerance;
        return d;
    }, py::arg("tol") = 1e-10);
}

#include "sqbound/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "sqbound/bound_context.hpp"
#include "sqbound/connectivity.hpp"
#include "sqbound/error.hpp"
#include "sqbound/graph_io.hpp"

namespace sqbound {

namespace {

Check strict_check(double gap, double bound, double margin) {
    const double slack = gap - bound;
    if (slack > margin) return Check::pass;
    if (slack > 0.0) return Check::tight;
    return Check::fail;
}

// A Perron entry counts as maximal if it is within this of the largest one.
constexpr double kTieTolerance = 1e-12;

void check_premises(VerificationRecord& rec, const Graph& h, const SpectralResult& perron, int k,
                    int max_degree, int n) {
    const Vertex u = rec.deleted_edge.u;
    const Vertex v = rec.deleted_edge.v;
    const Vertex w = perron.max_vertex;
    if (w == u || w == v) return;

    const Graph without_v = remove_vertex(h, v);
    auto shifted = [v](Vertex x) { return x > v ? x - 1 : x; };
    rec.kappa_without_v = vertex_connectivity(without_v);
    rec.menger_paths = max_vertex_disjoint_paths(without_v, shifted(w), shifted(u));
    const auto paths = shortest_disjoint_paths(without_v, shifted(w), shifted(u), k - 1);
    int total = 0;
    for (const auto& p : paths) total += static_cast<int>(p.size());
    rec.path_vertex_total = total;
    rec.path_budget = n - max_degree + 3 * k - 5;
}

VerificationRecord verify_edge(const Graph& g, const BoundContext& ctx, Edge e, const std::string& graph_id,
                               const VerifyOptions& options) {
    VerificationRecord rec;
    rec.graph_id = graph_id;
    rec.deleted_edge = e;
    rec.n = ctx.n;
    rec.max_degree = ctx.max_degree;
    rec.diameter = ctx.diameter;
    rec.connectivity = ctx.connectivity;

    const Graph h = delete_edge(g, e);
    rec.q = q_max(h, options.solver);
    rec.mu = mu_max(h, options.solver);
    rec.gap = 2.0 * ctx.max_degree - rec.q;
    rec.mu_gap = 2.0 * ctx.max_degree - rec.mu;

    const int k = ctx.connectivity;
    rec.eq3 = bound_thm1(ctx.n, ctx.diameter);
    if (k >= 2 && ctx.n > ctx.max_degree && ctx.max_degree >= k) {
        rec.eq4 = bound_thm2(ctx.n, ctx.max_degree, k);
    }

    rec.thm1 = strict_check(rec.gap, rec.eq3, options.margin);
    rec.cor1 = strict_check(rec.mu_gap, rec.eq3, options.margin);
    if (rec.eq4) {
        rec.thm2 = strict_check(rec.gap, *rec.eq4, options.margin);
        rec.cor2 = strict_check(rec.mu_gap, *rec.eq4, options.margin);
    }
    rec.dominant = (rec.eq4 && *rec.eq4 > rec.eq3) ? Dominant::eq4 : Dominant::eq3;
    rec.verdict = classify_by_thresholds(ctx.n, ctx.max_degree, ctx.diameter, k);
    if (rec.verdict == ThresholdVerdict::eq4_better) rec.threshold_consistent = rec.dominant == Dominant::eq4;
    if (rec.verdict == ThresholdVerdict::eq3_better) rec.threshold_consistent = rec.dominant == Dominant::eq3;

    rec.subgraph_connected = is_connected(h);
    rec.subgraph_bipartite = is_bipartite(h);
    if (rec.subgraph_connected) {
        const SpectralResult perron = perron_vector(h, options.solver);
        const double top = perron.vector[perron.max_vertex];
        rec.max_vertex = perron.max_vertex;
        rec.max_vertex_avoids_edge =
            perron.vector[e.u] < top - kTieTolerance && perron.vector[e.v] < top - kTieTolerance;
        if (options.check_premises && k >= 2 && ctx.max_degree >= 3) {
            check_premises(rec, h, perron, k, ctx.max_degree, ctx.n);
        }
    }
    return rec;
}

void update_min(std::optional<double>& slot, double value) {
    if (!slot || value < *slot) slot = value;
}

bool premise_failed(const VerificationRecord& rec) {
    if (rec.max_vertex_avoids_edge && !*rec.max_vertex_avoids_edge) return true;
    const int needed = rec.connectivity - 1;
    if (rec.kappa_without_v && *rec.kappa_without_v < needed) return true;
    if (rec.menger_paths && *rec.menger_paths < needed) return true;
    return false;
}

Table1Row row_from(const VerificationRecord& rec, std::string graph, std::string subgraph) {
    Table1Row row;
    row.graph = std::move(graph);
    row.subgraph = std::move(subgraph);
    row.gap = rec.gap;
    row.eq3 = rec.eq3;
    row.eq4 = rec.eq4;
    row.theorems_hold = rec.thm1 == Check::pass && (rec.thm2 == Check::pass || rec.thm2 == Check::skipped);
    return row;
}

bool close(double computed, std::optional<double> printed) {
    return printed && std::abs(computed - *printed) <= Table1::tolerance;
}

}  // namespace

std::string to_string(Check c) {
    switch (c) {
        case Check::pass: return "pass";
        case Check::tight: return "tight";
        case Check::fail: return "fail";
        case Check::skipped: break;
    }
    return "skip";
}

bool VerificationRecord::violated() const {
    return thm1 == Check::fail || thm2 == Check::fail || cor1 == Check::fail || cor2 == Check::fail ||
           !threshold_consistent || gap <= 0.0 || mu_gap < gap - 1e-9;
}

std::vector<VerificationRecord> verify_graph(const Graph& g, const std::string& graph_id,
                                             const VerifyOptions& options) {
    if (!is_connected(g)) throw InvalidArgument("verify_graph: " + graph_id + " is disconnected");
    if (!g.is_regular()) throw InvalidArgument("verify_graph: " + graph_id + " is not regular");
    std::vector<VerificationRecord> out;
    if (g.size() == 0) return out;
    const BoundContext ctx = bound_context(g);
    for (const Edge& e : g.edges()) out.push_back(verify_edge(g, ctx, e, graph_id, options));
    return out;
}

void CheckTally::add(Check c) {
    switch (c) {
        case Check::pass: ++pass; break;
        case Check::tight: ++tight; break;
        case Check::fail: ++fail; break;
        case Check::skipped: ++skipped; break;
    }
}

int CampaignSummary::violations() const {
    int count = 0;
    for (const auto& rec : records) count += rec.violated() ? 1 : 0;
    return count;
}

CampaignSummary campaign(const std::vector<FamilySpec>& specs, const VerifyOptions& options,
                         std::uint64_t default_seed) {
    CampaignSummary summary;
    for (FamilySpec spec : specs) {
        if (spec.kind == FamilyKind::random_regular && !spec.seed) spec.seed = default_seed;
        const std::string id = to_string(spec);
        Graph g;
        try {
            g = generate(spec, default_seed);
        } catch (const Error& e) {
            summary.skipped.push_back({id, e.what()});
            continue;
        }
        if (!is_connected(g) || !g.is_regular()) {
            summary.skipped.push_back({id, "not a connected regular graph"});
            continue;
        }
        ++summary.graphs;
        auto records = verify_graph(g, id, options);
        summary.records.insert(summary.records.end(), records.begin(), records.end());
    }

    std::stable_sort(summary.records.begin(), summary.records.end(), [](const auto& a, const auto& b) {
        if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
        return a.deleted_edge < b.deleted_edge;
    });

    for (const auto& rec : summary.records) {
        summary.thm1.add(rec.thm1);
        summary.thm2.add(rec.thm2);
        summary.cor1.add(rec.cor1);
        summary.cor2.add(rec.cor2);
        if (!rec.threshold_consistent) ++summary.threshold_inconsistent;
        if (premise_failed(rec)) ++summary.premise_failures;
        if (rec.path_vertex_total && *rec.path_vertex_total > *rec.path_budget) ++summary.budget_excess;
        update_min(summary.min_ratio_eq3, rec.gap / rec.eq3);
        if (rec.eq4) update_min(summary.min_ratio_eq4, rec.gap / *rec.eq4);
    }
    return summary;
}

std::vector<FamilySpec> default_campaign_specs(std::uint64_t base_seed) {
    std::vector<FamilySpec> specs;
    for (int n = 3; n <= 20; ++n) specs.push_back({FamilyKind::cycle, {n}, {}});
    for (int n = 3; n <= 14; ++n) specs.push_back({FamilyKind::complete, {n}, {}});
    for (int d = 2; d <= 6; ++d) specs.push_back({FamilyKind::complete_bipartite, {d, d}, {}});
    for (int d = 2; d <= 4; ++d) specs.push_back({FamilyKind::hypercube, {d}, {}});
    specs.push_back({FamilyKind::petersen, {}, {}});
    for (int n = 5; n <= 12; ++n) specs.push_back({FamilyKind::circulant, {n, 1, 2}, {}});

    constexpr int kRandomShapes[][2] = {{8, 3}, {10, 3}, {12, 3}, {14, 3}, {9, 4},
                                        {11, 4}, {13, 4}, {10, 5}, {12, 5}, {14, 5}};
    for (int i = 0; i < 50; ++i) {
        const auto& shape = kRandomShapes[i % 10];
        specs.push_back({FamilyKind::random_regular, {shape[0], shape[1]}, base_seed + 1 + static_cast<std::uint64_t>(i)});
    }
    return specs;
}

Table1 reproduce_table1(const SolverOptions& solver) {
    VerifyOptions options;
    options.solver = solver;
    options.check_premises = false;

    struct Printed {
        const char* graph;
        const char* subgraph;
        Graph g;
        double gap, eq3, eq4;
    };
    const Printed printed[] = {
        {"C6", "P6", cycle_graph(6), 0.268, 0.0606, 0.05128},
        {"C12", "P12", cycle_graph(12), 0.0682, 0.0159, 0.0094},
        {"K6", "K6-e", complete_graph(6), 0.5359, 0.2222, 0.25397},
        {"K12", "K12-e", complete_graph(12), 0.2918, 0.1111, 0.14948},
    };

    Table1 table;
    for (const auto& p : printed) {
        // Edge-transitive: every maximal subgraph is isomorphic, one edge suffices.
        const BoundContext ctx = bound_context(p.g);
        const auto rec = verify_edge(p.g, ctx, p.g.edges().front(), p.graph, options);
        Table1Row row = row_from(rec, p.graph, p.subgraph);
        row.printed_gap = p.gap;
        row.printed_eq3 = p.eq3;
        row.printed_eq4 = p.eq4;
        row.gap_match = close(row.gap, row.printed_gap);
        row.eq3_match = close(row.eq3, row.printed_eq3);
        row.eq4_match = row.eq4 && close(*row.eq4, row.printed_eq4);
        row.known_discrepancy = std::string_view(p.graph) == "C12" && !row.eq3_match;
        table.exact_rows.push_back(std::move(row));
    }

    for (const auto& set : candidate_g1_g2()) {
        int index = 0;
        for (const Graph& g : set.graphs) {
            ++index;
            const std::string label = "cubic" + std::to_string(set.n) + "#" + std::to_string(index) + " " + to_graph6(g);
            const BoundContext ctx = bound_context(g);
            std::vector<Graph> seen;
            for (const Edge& e : g.edges()) {
                Graph h = delete_edge(g, e);
                const bool duplicate =
                    std::any_of(seen.begin(), seen.end(), [&](const Graph& s) { return is_isomorphic(s, h); });
                if (duplicate) continue;
                seen.push_back(std::move(h));
                const auto rec = verify_edge(g, ctx, e, label, options);
                table.candidate_rows.push_back(
                    row_from(rec, label, "-(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"));
            }
        }
    }

    const Printed candidates[] = {
        {"G1", "G11", Graph{}, 0.4384, 0.0952, 0.1379},
        {"G1", "G12", Graph{}, 0.4113, 0.0952, 0.2069},
        {"G2", "G21", Graph{}, 0.2907, 0.0714, 0.0816},
    };
    for (const auto& p : candidates) {
        Table1Row row;
        row.graph = p.graph;
        row.subgraph = p.subgraph;
        row.printed_gap = p.gap;
        row.printed_eq3 = p.eq3;
        row.printed_eq4 = p.eq4;
        row.computed = false;
        for (const auto& candidate : table.candidate_rows) {
            if (close(candidate.gap, row.printed_gap)) row.gap_matches.push_back(candidate.graph + candidate.subgraph);
        }
        table.printed_candidates.push_back(std::move(row));
    }
    return table;
}

}  // namespace sqbound

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqbound/bounds.hpp"
#include "sqbound/families.hpp"
#include "sqbound/graph.hpp"
#include "sqbound/spectral.hpp"

namespace sqbound {

// Outcome of a strict inequality `gap > bound`.
enum class Check {
    pass,     // gap - bound > margin
    tight,    // 0 < gap - bound <= margin: needs a human look, not a violation
    fail,     // gap <= bound
    skipped,  // hypothesis not met (k < 2 for the connectivity bound)
};

std::string to_string(Check c);

struct VerifyOptions {
    SolverOptions solver;
    double margin = 1e-9;
    // Also check the Menger-path ingredients of the connectivity bound.
    bool check_premises = true;
};

struct VerificationRecord {
    std::string graph_id;
    Edge deleted_edge;

    // Parameters of the ambient regular graph G, not of H.
    int n = 0;
    int max_degree = 0;
    int diameter = 0;
    int connectivity = 0;

    double q = 0.0;   // q(H)
    double mu = 0.0;  // mu(H)
    double gap = 0.0;     // 2 Delta - q(H)
    double mu_gap = 0.0;  // 2 Delta - mu(H)
    double eq3 = 0.0;
    std::optional<double> eq4;

    Check thm1 = Check::skipped;
    Check thm2 = Check::skipped;
    Check cor1 = Check::skipped;
    Check cor2 = Check::skipped;
    Dominant dominant = Dominant::eq3;
    ThresholdVerdict verdict = ThresholdVerdict::undetermined;
    bool threshold_consistent = true;

    bool subgraph_connected = false;
    bool subgraph_bipartite = false;
    // Perron diagnostics, present when H is connected.
    std::optional<int> max_vertex;
    std::optional<bool> max_vertex_avoids_edge;
    // Connectivity-bound diagnostics, present when k >= 2, Delta >= 3 and the
    // max vertex w differs from u, v: kappa(H - v) and the disjoint w-u paths
    // in H - v, plus the total vertex count of a shortest such system of k-1
    // paths against the budget n - Delta + 3k - 5.
    std::optional<int> kappa_without_v;
    std::optional<int> menger_paths;
    std::optional<int> path_vertex_total;
    std::optional<int> path_budget;

    bool violated() const;
};

// One record per edge of g, in edge order. Throws InvalidArgument unless g is
// connected and regular.
std::vector<VerificationRecord> verify_graph(const Graph& g, const std::string& graph_id,
                                             const VerifyOptions& options = {});

struct CheckTally {
    int pass = 0;
    int tight = 0;
    int fail = 0;
    int skipped = 0;

    void add(Check c);
};

struct SkippedSpec {
    std::string spec;
    std::string reason;
};

struct CampaignSummary {
    std::vector<VerificationRecord> records;  // sorted by graph_id, then edge
    std::vector<SkippedSpec> skipped;
    int graphs = 0;
    CheckTally thm1, thm2, cor1, cor2;
    int threshold_inconsistent = 0;
    int premise_failures = 0;  // w in {u, v} or fewer than k-1 Menger paths
    int budget_excess = 0;     // recorded only, never a violation
    std::optional<double> min_ratio_eq3;  // min gap / eq3: sharpness
    std::optional<double> min_ratio_eq4;

    int violations() const;
};

// Generates and verifies every spec. Specs that fail to generate, or produce an
// irregular or disconnected graph, land in `skipped`.
CampaignSummary campaign(const std::vector<FamilySpec>& specs, const VerifyOptions& options = {},
                         std::uint64_t default_seed = 0);

// The standard family list: cycles 3..20, complete 3..14, K_{d,d} for 2..6,
// hypercubes 2..4, Petersen, circulants C(n; 1, 2) for 5..12 and 50 seeded
// random regular graphs (n <= 14, d <= 5) with seeds base_seed + 1 ... + 50.
std::vector<FamilySpec> default_campaign_specs(std::uint64_t base_seed = 0);

struct Table1Row {
    std::string graph;
    std::string subgraph;
    double gap = 0.0;
    double eq3 = 0.0;
    std::optional<double> eq4;
    std::optional<double> printed_gap;
    std::optional<double> printed_eq3;
    std::optional<double> printed_eq4;
    bool gap_match = false;
    bool eq3_match = false;
    bool eq4_match = false;
    // The printed C12 eq3 cell (0.0159) disagrees with 1/(12 * 5.75).
    bool known_discrepancy = false;
    bool theorems_hold = false;
    bool computed = true;  // false for printed-only rows
    // Printed-only rows: candidate subgraphs whose computed gap matches.
    std::vector<std::string> gap_matches;
};

struct Table1 {
    static constexpr double tolerance = 5e-4;
    std::vector<Table1Row> exact_rows;       // C6, C12, K6, K12
    std::vector<Table1Row> candidate_rows;   // computed, one per H class of each candidate
    std::vector<Table1Row> printed_candidates;  // G11, G12, G21 as printed; nothing computed
};

Table1 reproduce_table1(const SolverOptions& solver = {});

enum class OutputFormat { csv, markdown, json };

OutputFormat parse_output_format(std::string_view name);

void write_records(std::ostream& out, const std::vector<VerificationRecord>& records, OutputFormat format);
void write_summary(std::ostream& out, const CampaignSummary& summary);
void write_table1(std::ostream& out, const Table1& table, OutputFormat format);

}  // namespace sqbound

#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"
#include "sqbound/error.hpp"
#include "sqbound/verifier.hpp"

namespace sqbound {

namespace {

using nlohmann::json;

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

std::string fixed4(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string optional_fixed6(const std::optional<double>& value) { return value ? fixed6(*value) : ""; }

json optional_json(const std::optional<double>& value) { return value ? json(*value) : json(nullptr); }
json optional_json(const std::optional<int>& value) { return value ? json(*value) : json(nullptr); }
json optional_json(const std::optional<bool>& value) { return value ? json(*value) : json(nullptr); }

json record_json(const VerificationRecord& r) {
    return json{
        {"graph_id", r.graph_id},
        {"edge_u", r.deleted_edge.u},
        {"edge_v", r.deleted_edge.v},
        {"n", r.n},
        {"delta", r.max_degree},
        {"D", r.diameter},
        {"k", r.connectivity},
        {"q", r.q},
        {"mu", r.mu},
        {"gap", r.gap},
        {"mu_gap", r.mu_gap},
        {"eq3", r.eq3},
        {"eq4", optional_json(r.eq4)},
        {"thm1", to_string(r.thm1)},
        {"thm2", to_string(r.thm2)},
        {"cor1", to_string(r.cor1)},
        {"cor2", to_string(r.cor2)},
        {"dominant", to_string(r.dominant)},
        {"threshold_verdict", to_string(r.verdict)},
        {"consistent", r.threshold_consistent},
        {"subgraph_connected", r.subgraph_connected},
        {"subgraph_bipartite", r.subgraph_bipartite},
        {"max_vertex", optional_json(r.max_vertex)},
        {"max_vertex_avoids_edge", optional_json(r.max_vertex_avoids_edge)},
        {"kappa_without_v", optional_json(r.kappa_without_v)},
        {"menger_paths", optional_json(r.menger_paths)},
        {"path_vertex_total", optional_json(r.path_vertex_total)},
        {"path_budget", optional_json(r.path_budget)},
    };
}

json row_json(const Table1Row& row) {
    const bool computed = row.computed;
    json out{{"graph", row.graph}, {"subgraph", row.subgraph}};
    if (computed) {
        out["gap"] = row.gap;
        out["eq3"] = row.eq3;
        out["eq4"] = optional_json(row.eq4);
        out["theorems_hold"] = row.theorems_hold;
    }
    out["printed_gap"] = optional_json(row.printed_gap);
    out["printed_eq3"] = optional_json(row.printed_eq3);
    out["printed_eq4"] = optional_json(row.printed_eq4);
    if (!computed) out["gap_matches"] = row.gap_matches;
    if (computed && row.printed_gap) {
        out["gap_match"] = row.gap_match;
        out["eq3_match"] = row.eq3_match;
        out["eq4_match"] = row.eq4_match;
        out["known_discrepancy"] = row.known_discrepancy;
    }
    return out;
}

std::string cell(double computed, const std::optional<double>& printed, bool match, bool flagged) {
    std::string out = fixed4(computed);
    if (printed) {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%g", *printed);
        out += std::string(" (") + buffer + (match ? ", ok)" : flagged ? ", MISMATCH: known discrepancy)" : ", MISMATCH)");
    }
    return out;
}

std::string printed_cell(const std::optional<double>& printed) {
    if (!printed) return "-";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%g", *printed);
    return buffer;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "md" || name == "markdown") return OutputFormat::markdown;
    if (name == "json") return OutputFormat::json;
    throw InvalidArgument("unknown output format '" + std::string(name) + "'");
}

void write_records(std::ostream& out, const std::vector<VerificationRecord>& records, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv:
            out << "graph_id,edge_u,edge_v,n,delta,D,k,gap,mu_gap,eq3,eq4,thm1,thm2,cor1,cor2,dominant,consistent\n";
            for (const auto& r : records) {
                out << csv_field(r.graph_id) << ',' << r.deleted_edge.u << ',' << r.deleted_edge.v << ',' << r.n << ','
                    << r.max_degree << ',' << r.diameter << ',' << r.connectivity << ',' << fixed6(r.gap) << ','
                    << fixed6(r.mu_gap) << ',' << fixed6(r.eq3) << ',' << optional_fixed6(r.eq4) << ','
                    << to_string(r.thm1) << ',' << to_string(r.thm2) << ',' << to_string(r.cor1) << ','
                    << to_string(r.cor2) << ',' << to_string(r.dominant) << ',' << (r.threshold_consistent ? 1 : 0)
                    << '\n';
            }
            break;
        case OutputFormat::markdown:
            out << "| graph_id | edge | n | delta | D | k | gap | mu_gap | eq3 | eq4 | thm1 | thm2 | cor1 | cor2 | dominant | consistent |\n";
            out << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
            for (const auto& r : records) {
                out << "| " << r.graph_id << " | (" << r.deleted_edge.u << "," << r.deleted_edge.v << ") | " << r.n
                    << " | " << r.max_degree << " | " << r.diameter << " | " << r.connectivity << " | "
                    << fixed6(r.gap) << " | " << fixed6(r.mu_gap) << " | " << fixed6(r.eq3) << " | "
                    << (r.eq4 ? fixed6(*r.eq4) : "-") << " | " << to_string(r.thm1) << " | " << to_string(r.thm2)
                    << " | " << to_string(r.cor1) << " | " << to_string(r.cor2) << " | " << to_string(r.dominant)
                    << " | " << (r.threshold_consistent ? "yes" : "no") << " |\n";
            }
            break;
        case OutputFormat::json: {
            json array = json::array();
            for (const auto& r : records) array.push_back(record_json(r));
            out << array.dump(2) << '\n';
            break;
        }
    }
}

void write_summary(std::ostream& out, const CampaignSummary& s) {
    auto tally = [&](const char* name, const CheckTally& t) {
        out << name << ": pass=" << t.pass << " tight=" << t.tight << " fail=" << t.fail << " skipped=" << t.skipped
            << '\n';
    };
    out << "graphs: " << s.graphs << "  records: " << s.records.size() << "  skipped specs: " << s.skipped.size()
        << '\n';
    tally("theorem 1", s.thm1);
    tally("theorem 2", s.thm2);
    tally("corollary 1", s.cor1);
    tally("corollary 2", s.cor2);
    out << "threshold inconsistencies: " << s.threshold_inconsistent << '\n';
    out << "premise failures: " << s.premise_failures << '\n';
    out << "path budget excess (recorded only): " << s.budget_excess << '\n';
    if (s.min_ratio_eq3) out << "min gap/eq3: " << fixed6(*s.min_ratio_eq3) << '\n';
    if (s.min_ratio_eq4) out << "min gap/eq4: " << fixed6(*s.min_ratio_eq4) << '\n';
    for (const auto& skipped : s.skipped) out << "skipped " << skipped.spec << ": " << skipped.reason << '\n';
    out << "violations: " << s.violations() << '\n';
}

void write_table1(std::ostream& out, const Table1& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            json doc{{"tolerance", Table1::tolerance},
                     {"exact_rows", json::array()},
                     {"candidate_rows", json::array()},
                     {"printed_candidates", json::array()}};
            for (const auto& row : table.exact_rows) doc["exact_rows"].push_back(row_json(row));
            for (const auto& row : table.candidate_rows) doc["candidate_rows"].push_back(row_json(row));
            for (const auto& row : table.printed_candidates) doc["printed_candidates"].push_back(row_json(row));
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "section,graph,subgraph,gap,eq3,eq4,printed_gap,printed_eq3,printed_eq4,gap_match,eq3_match,"
                   "eq4_match,flag\n";
            for (const auto& row : table.exact_rows) {
                out << "exact," << row.graph << ',' << row.subgraph << ',' << fixed6(row.gap) << ','
                    << fixed6(row.eq3) << ',' << optional_fixed6(row.eq4) << ',' << printed_cell(row.printed_gap)
                    << ',' << printed_cell(row.printed_eq3) << ',' << printed_cell(row.printed_eq4) << ','
                    << row.gap_match << ',' << row.eq3_match << ',' << row.eq4_match << ','
                    << (row.known_discrepancy ? "eq3_printed_cell_mismatch" : "") << '\n';
            }
            for (const auto& row : table.candidate_rows) {
                out << "candidate," << row.graph << ',' << row.subgraph << ',' << fixed6(row.gap) << ','
                    << fixed6(row.eq3) << ',' << optional_fixed6(row.eq4) << ",,,,,,,"
                    << (row.theorems_hold ? "theorems_hold" : "theorem_violation") << '\n';
            }
            for (const auto& row : table.printed_candidates) {
                out << "printed," << row.graph << ',' << row.subgraph << ",,,," << printed_cell(row.printed_gap)
                    << ',' << printed_cell(row.printed_eq3) << ',' << printed_cell(row.printed_eq4) << ",,,,";
                for (std::size_t i = 0; i < row.gap_matches.size(); ++i) out << (i ? "; " : "gap matched by ") << row.gap_matches[i];
                out << '\n';
            }
            break;
        case OutputFormat::markdown:
            out << "| Graph | Maximal subgraph H | 2Delta - q(H) | bound (diameter) | bound (connectivity) |\n";
            out << "|---|---|---|---|---|\n";
            for (const auto& row : table.exact_rows) {
                out << "| " << row.graph << " | " << row.subgraph << " | "
                    << cell(row.gap, row.printed_gap, row.gap_match, false) << " | "
                    << cell(row.eq3, row.printed_eq3, row.eq3_match, row.known_discrepancy) << " | "
                    << (row.eq4 ? cell(*row.eq4, row.printed_eq4, row.eq4_match, false) : "-") << " |\n";
            }
            out << "\nComputed values with printed values in parentheses; tolerance " << Table1::tolerance << ".\n";
            out << "\n### G1 / G2 candidates (cubic, D = 2; figures unavailable)\n\n";
            out << "| Candidate | H | 2Delta - q(H) | bound (diameter) | bound (connectivity) | theorems |\n";
            out << "|---|---|---|---|---|---|\n";
            for (const auto& row : table.candidate_rows) {
                out << "| " << row.graph << " | " << row.subgraph << " | " << fixed4(row.gap) << " | "
                    << fixed4(row.eq3) << " | " << (row.eq4 ? fixed4(*row.eq4) : "-") << " | "
                    << (row.theorems_hold ? "hold" : "VIOLATED") << " |\n";
            }
            out << "\nPrinted rows for comparison (not asserted):\n\n";
            out << "| Graph | H | 2Delta - q(H) | bound (diameter) | bound (connectivity) | gap matched by |\n";
            out << "|---|---|---|---|---|---|\n";
            for (const auto& row : table.printed_candidates) {
                std::string matches;
                for (const auto& m : row.gap_matches) matches += (matches.empty() ? "" : "; ") + m;
                out << "| " << row.graph << " | " << row.subgraph << " | " << printed_cell(row.printed_gap) << " | "
                    << printed_cell(row.printed_eq3) << " | " << printed_cell(row.printed_eq4) << " | "
                    << (matches.empty() ? "-" : matches) << " |\n";
            }
            break;
    }
}

}  // namespace sqbound

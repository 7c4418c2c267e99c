#include "sqbound/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sqbound/bound_context.hpp"
#include "sqbound/bounds.hpp"
#include "sqbound/error.hpp"
#include "sqbound/families.hpp"
#include "sqbound/graph_io.hpp"
#include "sqbound/spectral.hpp"
#include "sqbound/verifier.hpp"

namespace sqbound::cli {

namespace {

struct Config {
    std::string gen;
    std::string input;
    std::string format = "graph6";
    std::string records_output = "csv";
    std::string table_output = "md";
    std::string out_path;
    std::string params;
    std::vector<std::string> specs;
    bool default_suite = false;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

Graph load_graph(const Config& cfg) {
    if (!cfg.gen.empty() && !cfg.input.empty()) throw InvalidArgument("use either --gen or --input, not both");
    if (!cfg.gen.empty()) return generate(parse_family_spec(cfg.gen), cfg.seed);
    if (!cfg.input.empty()) return read_graph_file(cfg.input, parse_graph_format(cfg.format));
    throw InvalidArgument("a graph is required: pass --gen SPEC or --input PATH");
}

// "n=6,delta=5,D=1,k=5[,m=14][,mindeg=4]"; m defaults to the regular count.
BoundContext parse_params(const std::string& text) {
    std::map<std::string, long long> values;
    std::stringstream stream(text);
    for (std::string item; std::getline(stream, item, ',');) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("bad --params entry '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string value = item.substr(eq + 1);
            values[item.substr(0, eq)] = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::logic_error&) {
            throw ParseError("bad number in --params entry '" + item + "'");
        }
    }
    for (const char* key : {"n", "delta", "D", "k"}) {
        if (!values.count(key)) throw ParseError(std::string("--params is missing '") + key + "'");
    }
    for (const auto& [key, value] : values) {
        if (key != "n" && key != "delta" && key != "D" && key != "k" && key != "m" && key != "mindeg") {
            throw ParseError("unknown --params key '" + key + "'");
        }
        if (value < 0 || value > 1'000'000) throw InvalidArgument("--params value out of range for '" + key + "'");
    }
    BoundContext ctx;
    ctx.n = static_cast<int>(values["n"]);
    ctx.max_degree = static_cast<int>(values["delta"]);
    ctx.diameter = static_cast<int>(values["D"]);
    ctx.connectivity = static_cast<int>(values["k"]);
    ctx.min_degree = static_cast<int>(values.count("mindeg") ? values["mindeg"] : values["delta"]);
    ctx.edges = static_cast<int>(values.count("m") ? values["m"] : values["n"] * values["delta"] / 2);
    return ctx;
}

BoundContext context_from(const Config& cfg) {
    if (!cfg.params.empty()) return parse_params(cfg.params);
    return bound_context(load_graph(cfg));
}

// Writes to --out when given, otherwise to `out`.
template <typename Writer>
void emit(const Config& cfg, std::ostream& out, Writer&& write) {
    if (cfg.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open '" + cfg.out_path + "' for writing");
    write(file);
    file.flush();
    if (!file) throw std::ios_base::failure("error writing '" + cfg.out_path + "'");
}

int cmd_spectra(const Config& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    SolverOptions solver;
    solver.tol = cfg.tol;
    out << "n = " << g.order() << "\n";
    out << "m = " << g.size() << "\n";
    out << "q = " << fixed6(q_max(g, solver)) << "\n";
    out << "mu = " << fixed6(mu_max(g, solver)) << "\n";
    out << "rho = " << fixed6(rho_max(g, solver)) << "\n";
    if (g.order() >= 1 && is_connected(g)) {
        out << "perron_max_vertex = " << perron_vector(g, solver).max_vertex << "\n";
    } else {
        out << "perron_max_vertex = n/a (disconnected)\n";
    }
    return ok;
}

void print_report(const BoundContext& ctx, const BoundReport& report, std::ostream& out) {
    out << "n = " << ctx.n << ", delta = " << ctx.max_degree << ", D = " << ctx.diameter
        << ", k = " << ctx.connectivity << ", m = " << ctx.edges << "\n";
    out << "eq3 = " << fixed6(report.eq3) << "\n";
    out << "eq4 = " << (report.eq4 ? fixed6(*report.eq4) : "n/a (k < 2)") << "\n";
    out << "eq1 = " << fixed6(report.eq1) << "\n";
    out << "eq2 = " << (report.eq2 ? fixed6(*report.eq2) : "n/a (regular)") << "\n";
    if (report.threshold) {
        out << "threshold_hi = " << fixed6(report.threshold->hi) << "\n";
        out << "threshold_lo = " << fixed6(report.threshold->lo) << "\n";
    } else {
        out << "threshold_hi = n/a\nthreshold_lo = n/a\n";
    }
    out << "dominant = " << to_string(report.dominant) << "\n";
    out << "threshold_verdict = " << to_string(report.verdict) << "\n";
    if (report.eq2_beats_eq1) out << "eq2_beats_eq1 (k >= sqrt(n)) = " << (*report.eq2_beats_eq1 ? "yes" : "no") << "\n";
}

int cmd_bounds(const Config& cfg, std::ostream& out) {
    const BoundContext ctx = context_from(cfg);
    print_report(ctx, bound_report(ctx), out);
    return ok;
}

int cmd_compare(const Config& cfg, std::ostream& out) {
    const BoundContext ctx = context_from(cfg);
    const Thresholds t = thresholds(ctx.n, ctx.max_degree, ctx.diameter);
    const BoundReport report = bound_report(ctx);
    out << "threshold_hi = " << fixed6(t.hi) << "\n";
    out << "threshold_lo = " << fixed6(t.lo) << "\n";
    out << "k = " << ctx.connectivity << "\n";
    out << "eq3 = " << fixed6(report.eq3) << "\n";
    out << "eq4 = " << (report.eq4 ? fixed6(*report.eq4) : "n/a (k < 2)") << "\n";
    out << "dominant = " << to_string(report.dominant) << "\n";
    out << "threshold_verdict = " << to_string(report.verdict) << "\n";
    const bool consistent = report.verdict == ThresholdVerdict::undetermined ||
                            (report.verdict == ThresholdVerdict::eq4_better) == (report.dominant == Dominant::eq4);
    out << "consistent = " << (consistent ? "yes" : "no") << "\n";
    return consistent ? ok : violation;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    std::vector<FamilySpec> specs;
    if (cfg.default_suite) specs = default_campaign_specs(cfg.seed);
    for (const auto& text : cfg.specs) specs.push_back(parse_family_spec(text));
    VerifyOptions options;
    options.solver.tol = cfg.tol;
    const CampaignSummary summary = campaign(specs, options, cfg.seed);
    const OutputFormat format = parse_output_format(cfg.records_output);
    emit(cfg, out, [&](std::ostream& stream) { write_records(stream, summary.records, format); });
    write_summary(err, summary);
    return summary.violations() == 0 ? ok : violation;
}

int cmd_table(const Config& cfg, std::ostream& out) {
    SolverOptions solver;
    solver.tol = cfg.tol;
    const Table1 table = reproduce_table1(solver);
    const OutputFormat format = parse_output_format(cfg.table_output);
    emit(cfg, out, [&](std::ostream& stream) { write_table1(stream, table, format); });
    const bool all_hold = std::all_of(table.exact_rows.begin(), table.exact_rows.end(),
                                      [](const Table1Row& r) { return r.theorems_hold; }) &&
                          std::all_of(table.candidate_rows.begin(), table.candidate_rows.end(),
                                      [](const Table1Row& r) { return r.theorems_hold; });
    return all_hold ? ok : violation;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
    if (cfg.gen.empty()) throw InvalidArgument("gen requires --gen SPEC");
    const Graph g = generate(parse_family_spec(cfg.gen), cfg.seed);
    const GraphFormat format = parse_graph_format(cfg.format);
    emit(cfg, out, [&](std::ostream& stream) { stream << format_graph(g, format); });
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signless Laplacian spectral radii and spectral-gap bounds for subgraphs of regular graphs",
                 "sqbound"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "Seed for random_regular specs without an explicit seed")->capture_default_str();
    app.add_option("--tol", cfg.tol, "Eigensolver residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto add_graph_input = [&](CLI::App* sub) {
        sub->add_option("--gen", cfg.gen, "Family spec, e.g. cycle:6 or random_regular:10,3;seed=7");
        sub->add_option("--input", cfg.input, "Graph file");
        sub->add_option("--format", cfg.format, "graph6 | edgelist")
            ->check(CLI::IsMember({"graph6", "g6", "edgelist"}))
            ->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub, std::string& target) {
        sub->add_option("--output", target, "csv | md | json")
            ->check(CLI::IsMember({"csv", "md", "markdown", "json"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out_path, "Write to this path instead of stdout");
    };

    auto* spectra = app.add_subcommand("spectra", "Print q, mu, rho and the Perron max vertex of a graph");
    add_graph_input(spectra);

    auto* bounds = app.add_subcommand("bounds", "Evaluate all bounds for a graph or explicit parameters");
    add_graph_input(bounds);
    bounds->add_option("--params", cfg.params, "n=..,delta=..,D=..,k=..[,m=..]");

    auto* compare = app.add_subcommand("compare", "Crossover thresholds and which bound dominates");
    add_graph_input(compare);
    compare->add_option("--params", cfg.params, "n=..,delta=..,D=..,k=..");

    auto* verify = app.add_subcommand("verify", "Verify the theorems on every maximal subgraph of family graphs");
    verify->add_option("--spec", cfg.specs, "Family spec (repeatable)");
    verify->add_flag("--default", cfg.default_suite, "Include the standard family list");
    add_output(verify, cfg.records_output);

    auto* table = app.add_subcommand("table", "Reproduce the C6/C12/K6/K12 table and G1/G2 candidates");
    add_output(table, cfg.table_output);

    auto* gen = app.add_subcommand("gen", "Write a family graph as graph6 or an edge list");
    add_graph_input(gen);
    gen->add_option("--out", cfg.out_path, "Write to this path instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (spectra->parsed()) return cmd_spectra(cfg, out);
        if (bounds->parsed()) return cmd_bounds(cfg, out);
        if (compare->parsed()) return cmd_compare(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (table->parsed()) return cmd_table(cfg, out);
        if (gen->parsed()) return cmd_gen(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return usage_error;
    } catch (const DisconnectedGraph& e) {
        err << "invalid argument: " << e.what() << "\n";
        return usage_error;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return io_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return numerical_error;
    }
    return usage_error;
}

}  // namespace sqbound::cli

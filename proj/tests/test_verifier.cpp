#include <cmath>
#include <sstream>

#include <numbers>

#include "json.hpp"

#include "doctest.h"
#include "sqbound/error.hpp"
#include "sqbound/verifier.hpp"

using namespace sqbound;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("verify_graph on C6") {
    const auto records = verify_graph(cycle_graph(6), "cycle:6");
    REQUIRE(records.size() == 6);
    for (const auto& r : records) {
        CHECK(r.graph_id == "cycle:6");
        CHECK(r.n == 6);
        CHECK(r.max_degree == 2);
        CHECK(r.diameter == 3);
        CHECK(r.connectivity == 2);
        CHECK(near(r.gap, 2.0 - 2.0 * std::cos(std::numbers::pi / 6.0), 1e-9));
        CHECK(near(r.eq3, 0.0606, 5e-5));
        REQUIRE(r.eq4);
        CHECK(near(*r.eq4, 0.0513, 5e-5));
        CHECK(r.thm1 == Check::pass);
        CHECK(r.thm2 == Check::pass);
        CHECK(r.cor1 == Check::pass);
        CHECK(r.cor2 == Check::pass);
        CHECK(r.dominant == Dominant::eq3);
        CHECK(r.threshold_consistent);
        CHECK(r.subgraph_connected);
        CHECK(r.subgraph_bipartite);
        CHECK(near(r.mu_gap, r.gap, 1e-8));
        CHECK_FALSE(r.violated());
    }
}

TEST_CASE("verify_graph on K6") {
    const auto records = verify_graph(complete_graph(6), "complete:6");
    REQUIRE(records.size() == 15);
    for (const auto& r : records) {
        CHECK(near(r.gap, 4.0 - 2.0 * std::sqrt(3.0), 1e-9));
        CHECK(near(r.eq3, 0.2222, 5e-5));
        CHECK(near(*r.eq4, 0.2540, 5e-5));
        CHECK(r.dominant == Dominant::eq4);
        CHECK(r.mu_gap > r.gap);
        CHECK_FALSE(r.subgraph_bipartite);
        CHECK_FALSE(r.violated());
        REQUIRE(r.max_vertex);
        CHECK(*r.max_vertex_avoids_edge);
        REQUIRE(r.menger_paths);
        CHECK(*r.menger_paths >= r.connectivity - 1);
        CHECK(*r.kappa_without_v >= r.connectivity - 1);
    }
}

TEST_CASE("verify_graph on K2") {
    const auto records = verify_graph(complete_graph(2), "complete:2");
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.connectivity == 1);
    CHECK(r.thm2 == Check::skipped);
    CHECK(r.cor2 == Check::skipped);
    CHECK_FALSE(r.eq4);
    CHECK(near(r.q, 0.0, 1e-12));
    CHECK(near(r.gap, 2.0, 1e-12));
    CHECK(near(r.eq3, 1.0 / 1.5, 1e-12));
    CHECK(r.thm1 == Check::pass);
    CHECK_FALSE(r.subgraph_connected);
    CHECK_FALSE(r.violated());
}

TEST_CASE("verify_graph preconditions") {
    CHECK_THROWS_AS(verify_graph(path_graph(4), "path:4"), InvalidArgument);
    const std::vector<std::pair<int, int>> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    CHECK_THROWS_AS(verify_graph(build_graph(6, two_triangles), "x"), InvalidArgument);
}

TEST_CASE("campaign examples") {
    const auto small = campaign({parse_family_spec("cycle:6"), parse_family_spec("complete:6")});
    CHECK(small.records.size() == 21);
    CHECK(small.graphs == 2);
    CHECK(small.violations() == 0);
    CHECK(small.records.front().graph_id == "complete:6");  // sorted by id

    std::vector<FamilySpec> specs;
    for (int seed = 1; seed <= 20; ++seed) {
        specs.push_back(parse_family_spec("random_regular:10,3;seed=" + std::to_string(seed)));
    }
    const auto rr = campaign(specs);
    CHECK(rr.records.size() == 300);
    CHECK(rr.violations() == 0);
    CHECK(rr.thm1.pass == 300);

    const auto empty = campaign({});
    CHECK(empty.records.empty());
    CHECK(empty.violations() == 0);
    CHECK_FALSE(empty.min_ratio_eq3);

    const auto skipped = campaign({parse_family_spec("path:5"), parse_family_spec("cycle:5")});
    CHECK(skipped.records.size() == 5);
    REQUIRE(skipped.skipped.size() == 1);
    CHECK(skipped.skipped[0].spec == "path:5");
}

TEST_CASE("default campaign list") {
    const auto specs = default_campaign_specs(0);
    int random = 0;
    for (const auto& s : specs) {
        if (s.kind != FamilyKind::random_regular) continue;
        ++random;
        CHECK(s.params[0] <= 14);
        CHECK(s.params[1] <= 5);
        REQUIRE(s.seed);
    }
    CHECK(random == 50);
    CHECK(specs.size() == 18 + 12 + 5 + 3 + 1 + 8 + 50);
}

TEST_CASE("record invariants over a mixed campaign") {
    const auto summary = campaign({parse_family_spec("petersen"), parse_family_spec("hypercube:3"),
                                   parse_family_spec("complete_bipartite:3,3"), parse_family_spec("circulant:9,1,2"),
                                   parse_family_spec("random_regular:12,4;seed=5")});
    CHECK(summary.violations() == 0);
    for (const auto& r : summary.records) {
        CHECK(r.gap > 0.0);
        CHECK(r.mu_gap >= r.gap - 1e-9);
        CHECK((std::abs(r.mu_gap - r.gap) <= 1e-8) == r.subgraph_bipartite);
        if (r.connectivity >= 2) {
            REQUIRE(r.eq4);
            CHECK(*r.eq4 < r.gap);
        }
    }
}

TEST_CASE("reference table reproduction") {
    const Table1 t = reproduce_table1();
    REQUIRE(t.exact_rows.size() == 4);
    for (const auto& row : t.exact_rows) {
        CHECK(row.gap_match);
        CHECK(row.eq4_match);
        CHECK(row.theorems_hold);
        if (row.graph == "C12") {
            CHECK_FALSE(row.eq3_match);
            CHECK(row.known_discrepancy);
            CHECK(near(row.eq3, 1.0 / 69.0, 1e-12));
        } else {
            CHECK(row.eq3_match);
            CHECK_FALSE(row.known_discrepancy);
        }
    }
    CHECK_FALSE(t.candidate_rows.empty());
    bool some_candidate_holds = false;
    for (const auto& row : t.candidate_rows) some_candidate_holds = some_candidate_holds || row.theorems_hold;
    CHECK(some_candidate_holds);
    REQUIRE(t.printed_candidates.size() == 3);
    for (const auto& row : t.printed_candidates) {
        CHECK_FALSE(row.computed);
        CHECK_FALSE(row.gap_matches.empty());
    }
}

TEST_CASE("record output formats") {
    const auto records = verify_graph(cycle_graph(4), "cycle:4");
    std::ostringstream csv;
    write_records(csv, records, OutputFormat::csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "graph_id,edge_u,edge_v,n,delta,D,k,gap,mu_gap,eq3,eq4,thm1,thm2,cor1,cor2,dominant,consistent");
    std::string first;
    std::getline(lines, first);
    CHECK(first.rfind("cycle:4,0,1,4,2,2,2,", 0) == 0);

    std::ostringstream json;
    write_records(json, records, OutputFormat::json);
    const auto parsed = nlohmann::json::parse(json.str());
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 4);

    std::ostringstream md;
    write_records(md, records, OutputFormat::markdown);
    CHECK(md.str().find("| graph_id") != std::string::npos);

    CHECK(parse_output_format("md") == OutputFormat::markdown);
    CHECK_THROWS(parse_output_format("xml"));
}

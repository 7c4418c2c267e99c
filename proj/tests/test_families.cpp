#include "doctest.h"
#include "sqbound/connectivity.hpp"
#include "sqbound/error.hpp"
#include "sqbound/families.hpp"

using namespace sqbound;

TEST_CASE("named families") {
    const Graph c6 = generate(parse_family_spec("cycle:6"));
    CHECK(c6.order() == 6);
    CHECK(c6.size() == 6);
    CHECK(c6.is_regular());
    CHECK(c6.max_degree() == 2);
    CHECK(diameter(c6) == 3);

    const Graph k12 = generate(parse_family_spec("complete:12"));
    CHECK(k12.size() == 66);
    CHECK(k12.is_regular());
    CHECK(k12.max_degree() == 11);

    const Graph kb = complete_bipartite_graph(3, 4);
    CHECK(kb.size() == 12);
    CHECK(is_bipartite(kb));

    const Graph q4 = hypercube_graph(4);
    CHECK(q4.order() == 16);
    CHECK(q4.max_degree() == 4);
    CHECK(q4.is_regular());
    CHECK(diameter(q4) == 4);

    const Graph p = petersen_graph();
    CHECK(p.is_regular());
    CHECK(p.max_degree() == 3);
    CHECK(diameter(p) == 2);

    const Graph circ = circulant_graph(8, {1, 2});
    CHECK(circ.is_regular());
    CHECK(circ.max_degree() == 4);
    CHECK(circulant_graph(8, {4}).max_degree() == 1);

    CHECK_THROWS_AS(cycle_graph(2), InvalidArgument);
    CHECK_THROWS_AS(circulant_graph(8, {5}), InvalidArgument);
    CHECK_THROWS_AS(hypercube_graph(0), InvalidArgument);
}

TEST_CASE("family spec parsing") {
    const FamilySpec s = parse_family_spec("random_regular:10,3;seed=7");
    CHECK(s.kind == FamilyKind::random_regular);
    CHECK(s.params == std::vector<int>{10, 3});
    REQUIRE(s.seed);
    CHECK(*s.seed == 7);
    CHECK(to_string(s) == "random_regular:10,3;seed=7");
    CHECK(parse_family_spec(to_string(parse_family_spec("circulant:8,1,2"))) == parse_family_spec("circulant:8,1,2"));
    CHECK(parse_family_spec("petersen").kind == FamilyKind::petersen);

    CHECK_THROWS_AS(parse_family_spec("dodecahedron:20"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("cycle:x"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("cycle:6;seed=1"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("cycle:6,7"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("petersen:3"), ParseError);
}

TEST_CASE("random regular graphs") {
    const Graph g = generate(parse_family_spec("random_regular:10,3;seed=7"));
    CHECK(g.order() == 10);
    CHECK(g.is_regular());
    CHECK(g.max_degree() == 3);
    CHECK(is_connected(g));
    CHECK(generate(parse_family_spec("random_regular:10,3;seed=7")) == g);
    // The default seed applies only when the spec carries none.
    CHECK(generate(parse_family_spec("random_regular:10,3"), 7) == g);

    for (int seed = 0; seed < 20; ++seed) {
        const Graph h = random_regular_graph(14, 5, static_cast<std::uint64_t>(seed));
        CHECK(h.is_regular());
        CHECK(h.max_degree() == 5);
        CHECK(is_connected(h));
    }
    CHECK_THROWS_AS(random_regular_graph(9, 3, 1), InvalidArgument);
    CHECK_THROWS_AS(random_regular_graph(5, 5, 1), InvalidArgument);
}

TEST_CASE("maximal_subgraphs") {
    const auto c6 = maximal_subgraphs(cycle_graph(6));
    CHECK(c6.size() == 6);
    for (const auto& [e, h] : c6) {
        CHECK(is_isomorphic(h, path_graph(6)));
        CHECK_FALSE(h.has_edge(e.u, e.v));
    }
    const Graph k6e = delete_edge(complete_graph(6), Edge(0, 1));
    const auto k6 = maximal_subgraphs(complete_graph(6));
    CHECK(k6.size() == 15);
    for (const auto& [e, h] : k6) CHECK(is_isomorphic(h, k6e));
    const auto k2 = maximal_subgraphs(complete_graph(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].second == empty_graph(2));
    CHECK_THROWS_AS(maximal_subgraphs(empty_graph(3)), InvalidArgument);
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(circulant_graph(6, {1, 3}), complete_bipartite_graph(3, 3)));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), path_graph(6)));
    CHECK_FALSE(is_isomorphic(hypercube_graph(3), circulant_graph(8, {1, 4})));
    CHECK(is_isomorphic(cycle_graph(7), circulant_graph(7, {2})));
}

TEST_CASE("regular graph enumeration") {
    // Known counts of connected cubic graphs: 2 on six vertices, 5 on eight, 19 on ten.
    CHECK(connected_regular_graphs(4, 3).size() == 1);
    CHECK(connected_regular_graphs(6, 3).size() == 2);
    CHECK(connected_regular_graphs(8, 3).size() == 5);
    CHECK(connected_regular_graphs(10, 3).size() == 19);
    // Connected 4-regular graphs on seven vertices: 2.
    CHECK(connected_regular_graphs(7, 4).size() == 2);
    CHECK_THROWS_AS(connected_regular_graphs(7, 3), InvalidArgument);
    CHECK(connected_regular_graphs(6, 0).empty());
    CHECK(connected_regular_graphs(1, 0).size() == 1);
}

TEST_CASE("candidate_g1_g2") {
    const auto sets = candidate_g1_g2();
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].n == 6);
    CHECK(sets[1].n == 8);
    for (const auto& set : sets) {
        CHECK(set.diameter == 2);
        CHECK_FALSE(set.graphs.empty());
        for (const Graph& g : set.graphs) {
            CHECK(g.order() == set.n);
            CHECK(g.is_regular());
            CHECK(g.max_degree() == 3);
            CHECK(diameter(g) == 2);
        }
    }
    const auto& six = sets[0].graphs;
    REQUIRE(six.size() == 2);
    const Graph prism = circulant_graph(6, {2, 3});  // C3 x K2
    const bool has_k33 = is_isomorphic(six[0], complete_bipartite_graph(3, 3)) ||
                         is_isomorphic(six[1], complete_bipartite_graph(3, 3));
    const bool has_prism = is_isomorphic(six[0], prism) || is_isomorphic(six[1], prism);
    CHECK(has_k33);
    CHECK(has_prism);
}

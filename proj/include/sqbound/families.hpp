#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqbound/graph.hpp"

namespace sqbound {

enum class FamilyKind {
    cycle,
    path,
    complete,
    complete_bipartite,
    circulant,
    hypercube,
    petersen,
    random_regular,
};

// A named graph family member. Written as `kind:p1[,p2...][;seed=S]`, e.g.
// `cycle:12`, `circulant:8,1,2` (order then jumps), `random_regular:10,3;seed=7`.
struct FamilySpec {
    FamilyKind kind = FamilyKind::cycle;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws ParseError on malformed text, unknown kinds and bad arity.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string to_string(FamilyKind kind);

// Deterministic for a fixed spec. random_regular needs a seed (the caller's
// default is applied through `default_seed`). Throws InvalidArgument for
// infeasible parameters and Error when random_regular exhausts its retries.
Graph generate(const FamilySpec& spec, std::uint64_t default_seed = 0);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph circulant_graph(int n, const std::vector<int>& jumps);
Graph hypercube_graph(int dimension);
Graph petersen_graph();

// Configuration model with rejection: stubs are shuffled with a seeded
// mt19937_64 and paired; any loop, multi-edge or disconnected outcome is
// discarded and redrawn.
Graph random_regular_graph(int n, int degree, std::uint64_t seed, int max_attempts = 100'000);

// One entry per edge e of g: (e, g - e). Throws InvalidArgument on edgeless g.
std::vector<std::pair<Edge, Graph>> maximal_subgraphs(const Graph& g);

// Backtracking search for a vertex bijection preserving adjacency.
bool is_isomorphic(const Graph& a, const Graph& b);

// Connected d-regular graphs of order n, one per isomorphism class.
std::vector<Graph> connected_regular_graphs(int n, int degree);

struct CandidateSet {
    int n = 0;
    int diameter = 0;
    std::vector<Graph> graphs;
};

// Connected cubic graphs with (n = 6, D = 2) and (n = 8, D = 2): the two
// parameter classes that reproduce the 1/(n(D - 1/4)) column for G1 and G2.
std::vector<CandidateSet> candidate_g1_g2();

}  // namespace sqbound

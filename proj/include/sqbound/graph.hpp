#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace sqbound {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built: every
// mutating operation returns a new Graph.
class Graph {
public:
    Graph() = default;

    // Throws InvalidArgument on out-of-range endpoints or self-loops.
    // Duplicate pairs collapse and pair order is irrelevant.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const { return edge_count_; }

    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges sorted lexicographically with u < v.
    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;

    int max_degree() const;
    int min_degree() const;
    bool is_regular() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

// Empty graph (no edges) on n vertices.
Graph empty_graph(int n);

// Maximum BFS distance over all pairs. 0 for n <= 1.
// Throws DisconnectedGraph when some pair is unreachable.
int diameter(const Graph& g);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Two-coloring test.
bool is_bipartite(const Graph& g);

// H = G - e. Throws InvalidArgument when e is not an edge of g.
Graph delete_edge(const Graph& g, Edge e);
// G + e. Throws InvalidArgument when e is already present or is a loop.
Graph add_edge(const Graph& g, Edge e);

// Subgraph induced by `keep` (relabelled 0..|keep|-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// G - v, with vertices above v shifted down by one.
Graph remove_vertex(const Graph& g, Vertex v);

}  // namespace sqbound

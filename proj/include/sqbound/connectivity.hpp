#pragma once

#include <vector>

#include "sqbound/graph.hpp"

namespace sqbound {

// Unit-capacity flow network obtained by splitting every vertex v into
// v_in = 2v and v_out = 2v + 1. The split arc has capacity 1, except for the
// two terminals which get capacity n. Each edge uv becomes u_out -> v_in and
// v_out -> u_in with capacity 1.
class FlowNetwork {
public:
    struct Arc {
        int to;
        int capacity;
        int cost;
        int reverse;   // index of the paired arc in adjacency_[to]
        int original;  // 0 for residual back-arcs
    };

    FlowNetwork(const Graph& g, Vertex source, Vertex sink);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::vector<Arc>& arcs(int node) const { return adjacency_[node]; }

    // Augments along BFS shortest paths until no s-t path remains or `limit`
    // units have been pushed. Returns the flow value.
    int max_flow(int limit);

    // Successive shortest paths (by arc cost, one per original edge) for at
    // most `limit` units. Returns the flow value.
    int min_cost_flow(int limit);

    // Decomposes the current flow into vertex sequences of the original graph.
    std::vector<std::vector<Vertex>> extract_paths() const;

private:
    void add_arc(int from, int to, int capacity, int cost);

    std::vector<std::vector<Arc>> adjacency_;
    int source_;
    int sink_;
    Vertex source_vertex_;
    Vertex sink_vertex_;
};

// Maximum number of internally vertex-disjoint s-t paths; a direct edge counts
// as one path. Throws InvalidArgument for s == t or out-of-range vertices.
int max_vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t);

// Up to `count` internally disjoint s-t paths minimizing the total number of
// edges. Each path is the vertex sequence s ... t.
std::vector<std::vector<Vertex>> shortest_disjoint_paths(const Graph& g, Vertex s, Vertex t, int count);

// kappa(K_n) = n - 1, kappa = 0 for disconnected graphs (and n <= 1).
// Otherwise the minimum local connectivity over the Esfahanian-Hakimi pair
// schedule: a minimum-degree vertex v against its non-neighbours, plus all
// non-adjacent pairs inside N(v).
int vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, int k);

}  // namespace sqbound

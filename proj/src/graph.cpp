#include "sqbound/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sqbound/error.hpp"

namespace sqbound {

namespace {

void check_vertex(int n, Vertex v) {
    if (v < 0 || v >= n) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n = " +
                              std::to_string(n));
    }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    std::size_t twice_m = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        twice_m += nbrs.size();
    }
    edge_count_ = static_cast<int>(twice_m / 2);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [a, b] : edges) normalized.emplace_back(a, b);
    *this = Graph(n, std::span<const Edge>(normalized));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = static_cast<int>(adjacency_[v].size());
    return out;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

int Graph::min_degree() const {
    if (adjacency_.empty()) return 0;
    int best = order();
    for (const auto& nbrs : adjacency_) best = std::min(best, static_cast<int>(nbrs.size()));
    return best;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) { return Graph(n, edges); }

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    check_vertex(g.order(), source);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (int d : bfs_distances(g, s)) {
            if (d < 0) throw DisconnectedGraph();
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : g.neighbors(comp[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const Vertex v = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    frontier.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph delete_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) {
        throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") is not in the graph");
    }
    auto edges = g.edges();
    edges.erase(std::find(edges.begin(), edges.end(), e));
    return Graph(g.order(), std::span<const Edge>(edges));
}

Graph add_edge(const Graph& g, Edge e) {
    check_vertex(g.order(), e.u);
    check_vertex(g.order(), e.v);
    if (e.u == e.v) throw InvalidArgument("self-loop");
    if (g.has_edge(e.u, e.v)) throw InvalidArgument("edge already present");
    auto edges = g.edges();
    edges.push_back(e);
    return Graph(g.order(), std::span<const Edge>(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(g.order(), keep[i]);
        if (relabel[keep[i]] >= 0) throw InvalidArgument("duplicate vertex in induced_subgraph");
        relabel[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.emplace_back(relabel[e.u], relabel[e.v]);
    }
    return Graph(static_cast<int>(keep.size()), std::span<const Edge>(edges));
}

Graph remove_vertex(const Graph& g, Vertex v) {
    check_vertex(g.order(), v);
    std::vector<Vertex> keep;
    keep.reserve(static_cast<std::size_t>(g.order() - 1));
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w != v) keep.push_back(w);
    }
    return induced_subgraph(g, keep);
}

}  // namespace sqbound

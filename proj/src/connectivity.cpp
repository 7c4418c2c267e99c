#include "sqbound/connectivity.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <string>

#include "sqbound/error.hpp"

namespace sqbound {

namespace {

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

void check_terminals(const Graph& g, Vertex s, Vertex t) {
    if (s < 0 || s >= g.order() || t < 0 || t >= g.order()) throw InvalidArgument("terminal out of range");
    if (s == t) throw InvalidArgument("source and sink must differ");
}

}  // namespace

FlowNetwork::FlowNetwork(const Graph& g, Vertex source, Vertex sink)
    : adjacency_(static_cast<std::size_t>(2 * g.order())),
      source_(out_node(source)),
      sink_(in_node(sink)),
      source_vertex_(source),
      sink_vertex_(sink) {
    check_terminals(g, source, sink);
    for (Vertex v = 0; v < g.order(); ++v) {
        const int capacity = (v == source || v == sink) ? g.order() : 1;
        add_arc(in_node(v), out_node(v), capacity, 0);
    }
    for (const Edge& e : g.edges()) {
        add_arc(out_node(e.u), in_node(e.v), 1, 1);
        add_arc(out_node(e.v), in_node(e.u), 1, 1);
    }
}

void FlowNetwork::add_arc(int from, int to, int capacity, int cost) {
    const int forward_index = static_cast<int>(adjacency_[from].size());
    const int backward_index = static_cast<int>(adjacency_[to].size()) + (from == to ? 1 : 0);
    adjacency_[from].push_back({to, capacity, cost, backward_index, capacity});
    adjacency_[to].push_back({from, 0, -cost, forward_index, 0});
}

int FlowNetwork::max_flow(int limit) {
    int flow = 0;
    const int nodes = node_count();
    std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(nodes));
    while (flow < limit) {
        std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
        parent[source_] = {source_, -1};
        std::deque<int> frontier{source_};
        while (!frontier.empty() && parent[sink_].first < 0) {
            const int node = frontier.front();
            frontier.pop_front();
            for (int i = 0; i < static_cast<int>(adjacency_[node].size()); ++i) {
                const Arc& arc = adjacency_[node][i];
                if (arc.capacity > 0 && parent[arc.to].first < 0) {
                    parent[arc.to] = {node, i};
                    frontier.push_back(arc.to);
                }
            }
        }
        if (parent[sink_].first < 0) break;
        // Every s-t path crosses a unit arc (the terminals are distinct), so
        // each augmentation pushes exactly one unit.
        for (int node = sink_; node != source_;) {
            const auto [prev, index] = parent[node];
            Arc& arc = adjacency_[prev][index];
            arc.capacity -= 1;
            adjacency_[node][arc.reverse].capacity += 1;
            node = prev;
        }
        ++flow;
    }
    return flow;
}

int FlowNetwork::min_cost_flow(int limit) {
    int flow = 0;
    const int nodes = node_count();
    std::vector<int> dist(static_cast<std::size_t>(nodes));
    std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(nodes));
    std::vector<char> queued(static_cast<std::size_t>(nodes));
    while (flow < limit) {
        std::fill(dist.begin(), dist.end(), INT_MAX);
        std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
        std::fill(queued.begin(), queued.end(), 0);
        dist[source_] = 0;
        std::deque<int> frontier{source_};
        queued[source_] = 1;
        // Bellman-Ford queue variant; back-arcs carry negative costs.
        while (!frontier.empty()) {
            const int node = frontier.front();
            frontier.pop_front();
            queued[node] = 0;
            for (int i = 0; i < static_cast<int>(adjacency_[node].size()); ++i) {
                const Arc& arc = adjacency_[node][i];
                if (arc.capacity > 0 && dist[node] + arc.cost < dist[arc.to]) {
                    dist[arc.to] = dist[node] + arc.cost;
                    parent[arc.to] = {node, i};
                    if (!queued[arc.to]) {
                        queued[arc.to] = 1;
                        frontier.push_back(arc.to);
                    }
                }
            }
        }
        if (dist[sink_] == INT_MAX) break;
        for (int node = sink_; node != source_;) {
            const auto [prev, index] = parent[node];
            Arc& arc = adjacency_[prev][index];
            arc.capacity -= 1;
            adjacency_[node][arc.reverse].capacity += 1;
            node = prev;
        }
        ++flow;
    }
    return flow;
}

std::vector<std::vector<Vertex>> FlowNetwork::extract_paths() const {
    // Remaining flow per forward arc, consumed as paths are peeled off.
    std::vector<std::vector<int>> remaining(adjacency_.size());
    for (std::size_t node = 0; node < adjacency_.size(); ++node) {
        for (const Arc& arc : adjacency_[node]) remaining[node].push_back(arc.original > 0 ? arc.original - arc.capacity : 0);
    }

    std::vector<std::vector<Vertex>> paths;
    while (true) {
        std::vector<Vertex> path{source_vertex_};
        int node = source_;
        bool advanced = true;
        while (node != sink_ && advanced) {
            advanced = false;
            for (std::size_t i = 0; i < adjacency_[node].size(); ++i) {
                if (remaining[node][i] <= 0) continue;
                --remaining[node][i];
                node = adjacency_[node][i].to;
                if (node % 2 == 0) path.push_back(node / 2);
                advanced = true;
                break;
            }
        }
        if (node != sink_) break;
        paths.push_back(std::move(path));
    }
    return paths;
}

int max_vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
    check_terminals(g, s, t);
    FlowNetwork network(g, s, t);
    return network.max_flow(INT_MAX);
}

std::vector<std::vector<Vertex>> shortest_disjoint_paths(const Graph& g, Vertex s, Vertex t, int count) {
    check_terminals(g, s, t);
    if (count < 0) throw InvalidArgument("negative path count");
    FlowNetwork network(g, s, t);
    network.min_cost_flow(count);
    return network.extract_paths();
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1 || !is_connected(g)) return 0;
    if (2LL * g.size() == static_cast<long long>(n) * (n - 1)) return n - 1;

    const auto degrees = g.degrees();
    const Vertex v = static_cast<Vertex>(std::min_element(degrees.begin(), degrees.end()) - degrees.begin());
    int best = degrees[v];

    auto local = [&](Vertex a, Vertex b) {
        FlowNetwork network(g, a, b);
        best = std::min(best, network.max_flow(best));
    };
    for (Vertex w = 0; w < n; ++w) {
        if (w != v && !g.has_edge(v, w)) local(v, w);
    }
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (!g.has_edge(nbrs[i], nbrs[j])) local(nbrs[i], nbrs[j]);
        }
    }
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw InvalidArgument("is_k_connected requires k >= 1");
    return vertex_connectivity(g) >= k;
}

}  // namespace sqbound

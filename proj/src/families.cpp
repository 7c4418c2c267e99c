#include "sqbound/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "sqbound/error.hpp"

namespace sqbound {

namespace {

struct KindInfo {
    FamilyKind kind;
    std::string_view name;
    int min_params;
    int max_params;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::cycle, "cycle", 1, 1},
    {FamilyKind::path, "path", 1, 1},
    {FamilyKind::complete, "complete", 1, 1},
    {FamilyKind::complete_bipartite, "complete_bipartite", 2, 2},
    {FamilyKind::circulant, "circulant", 2, 64},
    {FamilyKind::hypercube, "hypercube", 1, 1},
    {FamilyKind::petersen, "petersen", 0, 0},
    {FamilyKind::random_regular, "random_regular", 2, 2},
};

const KindInfo& info(FamilyKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k;
    }
    throw InvalidArgument("unknown family kind");
}

template <typename Int>
Int parse_number(std::string_view token, std::string_view spec) {
    Int value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("bad number '" + std::string(token) + "' in family spec '" + std::string(spec) + "'");
    }
    return value;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling; std::uniform_int_distribution is not portable.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return draw % bound;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidArgument(message);
}

// Sorted per-vertex (triangle count, distance histogram) signature.
std::vector<std::vector<int>> invariant(const Graph& g) {
    std::vector<std::vector<int>> sig;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> entry{g.degree(v), 0};
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) entry[1] += g.has_edge(nbrs[i], nbrs[j]) ? 1 : 0;
        }
        std::vector<int> hist(static_cast<std::size_t>(g.order() + 1), 0);
        for (int d : bfs_distances(g, v)) hist[d < 0 ? g.order() : d] += 1;
        entry.insert(entry.end(), hist.begin(), hist.end());
        sig.push_back(std::move(entry));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<Vertex>& order, std::size_t depth,
                    std::vector<int>& map, std::vector<char>& used) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < b.order(); ++w) {
        if (used[w] || b.degree(w) != a.degree(v)) continue;
        bool consistent = true;
        for (std::size_t i = 0; i < depth && consistent; ++i) {
            const Vertex u = order[i];
            consistent = a.has_edge(u, v) == b.has_edge(map[u], w);
        }
        if (!consistent) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_mapping(a, b, order, depth + 1, map, used)) return true;
        used[w] = 0;
        map[v] = -1;
    }
    return false;
}

// Connected labelled d-regular graphs: vertex i picks its missing neighbours among
// higher-numbered vertices that still have room.
void enumerate_regular(int n, int degree, std::vector<std::vector<char>>& adj, std::vector<int>& deg, int vertex,
                       const std::function<void()>& emit);

void choose_neighbours(int n, int degree, std::vector<std::vector<char>>& adj, std::vector<int>& deg, int vertex,
                       int next_candidate, const std::function<void()>& emit) {
    if (deg[vertex] == degree) {
        enumerate_regular(n, degree, adj, deg, vertex + 1, emit);
        return;
    }
    const int missing = degree - deg[vertex];
    for (int w = next_candidate; w < n; ++w) {
        if (n - w < missing) break;
        if (deg[w] >= degree) continue;
        // Only BFS labellings are generated: an unreached vertex may be taken
        // only if every unreached vertex between `vertex` and it already was.
        if (deg[w] == 0 && std::any_of(deg.begin() + vertex + 1, deg.begin() + w, [](int d) { return d == 0; })) {
            continue;
        }
        adj[vertex][w] = adj[w][vertex] = 1;
        ++deg[vertex];
        ++deg[w];
        choose_neighbours(n, degree, adj, deg, vertex, w + 1, emit);
        --deg[vertex];
        --deg[w];
        adj[vertex][w] = adj[w][vertex] = 0;
    }
}

void enumerate_regular(int n, int degree, std::vector<std::vector<char>>& adj, std::vector<int>& deg, int vertex,
                       const std::function<void()>& emit) {
    if (vertex == n) {
        emit();
        return;
    }
    if (vertex > 0 && deg[vertex] == 0) return;  // unreached: not a connected BFS labelling
    choose_neighbours(n, degree, adj, deg, vertex, vertex + 1, emit);
}

}  // namespace

std::string to_string(FamilyKind kind) { return std::string(info(kind).name); }

FamilySpec parse_family_spec(std::string_view text) {
    const std::string_view original = text;
    FamilySpec spec;
    if (const auto semi = text.find(';'); semi != std::string_view::npos) {
        std::string_view extra = text.substr(semi + 1);
        text = text.substr(0, semi);
        if (!extra.starts_with("seed=")) throw ParseError("expected ';seed=S' in family spec '" + std::string(original) + "'");
        spec.seed = parse_number<std::uint64_t>(extra.substr(5), original);
    }
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const KindInfo* kind = nullptr;
    for (const auto& k : kKinds) {
        if (k.name == name) kind = &k;
    }
    if (kind == nullptr) throw ParseError("unknown family '" + std::string(name) + "'");
    spec.kind = kind->kind;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            spec.params.push_back(parse_number<int>(rest.substr(0, comma), original));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    const int count = static_cast<int>(spec.params.size());
    if (count < kind->min_params || count > kind->max_params) {
        throw ParseError("wrong number of parameters for '" + std::string(name) + "' in '" + std::string(original) + "'");
    }
    if (spec.seed && spec.kind != FamilyKind::random_regular) {
        throw ParseError("seed only applies to random_regular: '" + std::string(original) + "'");
    }
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string out(info(spec.kind).name);
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
    }
    if (spec.seed) out += ";seed=" + std::to_string(*spec.seed);
    return out;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::span<const Edge>(edges));
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::span<const Edge>(edges));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::span<const Edge>(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite needs both sides >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    }
    return Graph(a + b, std::span<const Edge>(edges));
}

Graph circulant_graph(int n, const std::vector<int>& jumps) {
    require(n >= 3, "circulant needs n >= 3");
    require(!jumps.empty(), "circulant needs at least one jump");
    std::vector<Edge> edges;
    for (int jump : jumps) {
        require(jump >= 1 && 2 * jump <= n, "circulant jumps must lie in 1..n/2");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + jump) % n);
    }
    return Graph(n, std::span<const Edge>(edges));
}

Graph hypercube_graph(int dimension) {
    require(dimension >= 1 && dimension <= 12, "hypercube dimension must lie in 1..12");
    const int n = 1 << dimension;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        for (int bit = 0; bit < dimension; ++bit) {
            const int w = v ^ (1 << bit);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph(n, std::span<const Edge>(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, std::span<const Edge>(edges));
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed, int max_attempts) {
    require(n >= 1 && degree >= 0 && degree < n, "random_regular needs 0 <= d < n");
    require((static_cast<long long>(n) * degree) % 2 == 0, "random_regular needs n*d even");
    require(n == 1 || degree >= 2 || (degree == 1 && n == 2), "no connected graph with these parameters");

    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(degree), v);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        }
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
            simple = stubs[i] != stubs[i + 1];
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g(n, std::span<const Edge>(edges));
        if (is_connected(g)) return g;
    }
    throw Error("random_regular(" + std::to_string(n) + "," + std::to_string(degree) + ") failed after " +
                std::to_string(max_attempts) + " attempts");
}

Graph generate(const FamilySpec& spec, std::uint64_t default_seed) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::cycle: return cycle_graph(p.at(0));
        case FamilyKind::path: return path_graph(p.at(0));
        case FamilyKind::complete: return complete_graph(p.at(0));
        case FamilyKind::complete_bipartite: return complete_bipartite_graph(p.at(0), p.at(1));
        case FamilyKind::circulant: return circulant_graph(p.at(0), std::vector<int>(p.begin() + 1, p.end()));
        case FamilyKind::hypercube: return hypercube_graph(p.at(0));
        case FamilyKind::petersen: return petersen_graph();
        case FamilyKind::random_regular: return random_regular_graph(p.at(0), p.at(1), spec.seed.value_or(default_seed));
    }
    throw InvalidArgument("unknown family kind");
}

std::vector<std::pair<Edge, Graph>> maximal_subgraphs(const Graph& g) {
    require(g.size() >= 1, "maximal_subgraphs needs at least one edge");
    std::vector<std::pair<Edge, Graph>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e, delete_edge(g, e));
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    // BFS order from each component keeps consecutive vertices adjacent,
    // which prunes the search early.
    std::vector<Vertex> order;
    for (const auto& comp : connected_components(a)) {
        std::vector<char> seen(static_cast<std::size_t>(a.order()), 0);
        std::vector<Vertex> local{comp.front()};
        seen[comp.front()] = 1;
        for (std::size_t i = 0; i < local.size(); ++i) {
            for (Vertex w : a.neighbors(local[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    local.push_back(w);
                }
            }
        }
        order.insert(order.end(), local.begin(), local.end());
    }
    std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
    return extend_mapping(a, b, order, 0, map, used);
}

std::vector<Graph> connected_regular_graphs(int n, int degree) {
    require(n >= 1 && n <= 10, "connected_regular_graphs supports 1 <= n <= 10");
    require(degree >= 0 && degree < n && (n * degree) % 2 == 0, "infeasible regular parameters");

    std::map<std::vector<std::vector<int>>, std::vector<Graph>> classes;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    enumerate_regular(n, degree, adj, deg, 0, [&] {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (adj[i][j]) edges.emplace_back(i, j);
            }
        }
        Graph g(n, std::span<const Edge>(edges));
        if (!is_connected(g)) return;
        auto& bucket = classes[invariant(g)];
        for (const Graph& rep : bucket) {
            if (is_isomorphic(rep, g)) return;
        }
        bucket.push_back(std::move(g));
    });

    std::vector<Graph> out;
    for (auto& [sig, reps] : classes) {
        for (auto& g : reps) out.push_back(std::move(g));
    }
    return out;
}

std::vector<CandidateSet> candidate_g1_g2() {
    std::vector<CandidateSet> out;
    for (int n : {6, 8}) {
        CandidateSet set{n, 2, {}};
        for (Graph& g : connected_regular_graphs(n, 3)) {
            if (diameter(g) == 2) set.graphs.push_back(std::move(g));
        }
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace sqbound

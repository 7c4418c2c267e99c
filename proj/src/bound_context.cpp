#include "sqbound/bound_context.hpp"

#include "sqbound/connectivity.hpp"

namespace sqbound {

BoundContext bound_context(const Graph& g) {
    BoundContext ctx;
    ctx.diameter = diameter(g);
    ctx.n = g.order();
    ctx.max_degree = g.max_degree();
    ctx.min_degree = g.min_degree();
    ctx.connectivity = vertex_connectivity(g);
    ctx.edges = g.size();
    return ctx;
}

}  // namespace sqbound

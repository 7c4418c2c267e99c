#pragma once

#include "sqbound/graph.hpp"

namespace sqbound {

// Parameters that feed every bound formula.
struct BoundContext {
    int n = 0;
    int max_degree = 0;    // Delta
    int min_degree = 0;    // delta
    int diameter = 0;      // D
    int connectivity = 0;  // k
    int edges = 0;         // m

    friend bool operator==(const BoundContext&, const BoundContext&) = default;
};

// Throws DisconnectedGraph for disconnected input.
BoundContext bound_context(const Graph& g);

}  // namespace sqbound

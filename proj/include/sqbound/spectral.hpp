#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqbound/graph.hpp"

namespace sqbound {

// Dense symmetric matrix, row-major. set() writes both (i,j) and (j,i) so
// symmetry holds exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order, 0.0) {}

    int order() const { return order_; }
    double operator()(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, double value) {
        entries_[index(i, j)] = value;
        entries_[index(j, i)] = value;
    }
    void add_diagonal(int i, double value) { entries_[index(i, i)] += value; }

    std::span<const double> row(int i) const {
        return std::span<const double>(entries_).subspan(static_cast<std::size_t>(i) * order_, order_);
    }

    // y = M x
    void multiply(std::span<const double> x, std::span<double> y) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * order_ + j; }

    int order_ = 0;
    std::vector<double> entries_;
};

SymMatrix adjacency_matrix(const Graph& g);
// L = D - A
SymMatrix laplacian_matrix(const Graph& g);
// Q = D + A
SymMatrix signless_laplacian_matrix(const Graph& g);

struct SolverOptions {
    double tol = 1e-10;          // on ||Mx - lambda x||_inf
    long max_iterations = 200'000;
};

struct SpectralResult {
    double value = 0.0;
    std::vector<double> vector;  // unit Euclidean norm
    double residual = 0.0;
    long iterations = 0;
    bool used_fallback = false;  // power iteration hit the cap; dense Jacobi answered
    int max_vertex = -1;         // index of the largest vector entry (perron_vector only)
};

// Largest eigenvalue of a symmetric matrix by shifted power iteration with a
// Rayleigh-quotient estimate. The shift is the Gershgorin lower bound, so
// M + sI is positive semidefinite and its dominant eigenvalue is the largest
// one of M. Nonnegative matrices start from (off-diagonal row sum + 1); others
// from a fixed quasi-random vector. Throws InvalidArgument for tol <= 0 and
// NumericalFailure if the dense fallback also fails.
SpectralResult largest_eigenvalue(const SymMatrix& m, const SolverOptions& options = {});

// Spectral radii (largest eigenvalue) taken as the maximum over connected
// components; isolated vertices contribute 0.
double q_max(const Graph& g, const SolverOptions& options = {});
double mu_max(const Graph& g, const SolverOptions& options = {});
double rho_max(const Graph& g, const SolverOptions& options = {});

// Positive unit eigenvector of Q(g) at q(g). Throws DisconnectedGraph.
SpectralResult perron_vector(const Graph& g, const SolverOptions& options = {});

struct Eigensystem {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations until the off-diagonal inf-norm is <= 1e-12 (relative
// to the matrix scale).
Eigensystem jacobi_eigensystem(const SymMatrix& m);

// Full spectrum, ascending. Independent of the power-iteration path.
std::vector<double> dense_spectrum_oracle(const SymMatrix& m);

}  // namespace sqbound

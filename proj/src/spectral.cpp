#include "sqbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sqbound/error.hpp"

namespace sqbound {

void SymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    for (int i = 0; i < order_; ++i) {
        const auto r = row(i);
        double acc = 0.0;
        for (int j = 0; j < order_; ++j) acc += r[j] * x[j];
        y[i] = acc;
    }
}

namespace {

enum class DiagonalSign { none, plus, minus };

SymMatrix graph_matrix(const Graph& g, DiagonalSign diagonal) {
    SymMatrix m(g.order());
    const double off = diagonal == DiagonalSign::minus ? -1.0 : 1.0;
    for (const Edge& e : g.edges()) m.set(e.u, e.v, off);
    if (diagonal != DiagonalSign::none) {
        for (Vertex v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
    }
    return m;
}

double norm2(std::span<const double> x) {
    return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

void normalize(std::span<double> x) {
    const double norm = norm2(x);
    for (double& xi : x) xi /= norm;
}

double residual_inf(const SymMatrix& m, std::span<const double> x, double lambda) {
    std::vector<double> mx(x.size());
    m.multiply(x, mx);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(mx[i] - lambda * x[i]));
    return worst;
}

double inf_norm(const SymMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.order(); ++i) {
        double row_sum = 0.0;
        for (double a : m.row(i)) row_sum += std::abs(a);
        best = std::max(best, row_sum);
    }
    return best;
}

// Orient so the entry sum is nonnegative; Perron vectors come out positive.
void orient(std::span<double> x) {
    if (std::accumulate(x.begin(), x.end(), 0.0) < 0.0) {
        for (double& xi : x) xi = -xi;
    }
}

std::vector<double> start_vector(const SymMatrix& m) {
    const int n = m.order();
    std::vector<double> x(static_cast<std::size_t>(n));
    bool nonnegative = true;
    for (int i = 0; i < n && nonnegative; ++i) {
        for (double a : m.row(i)) {
            if (a < 0.0) {
                nonnegative = false;
                break;
            }
        }
    }
    if (nonnegative) {
        // Off-diagonal row sum is the vertex degree for A, L and Q.
        for (int i = 0; i < n; ++i) {
            double off = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) off += m(i, j);
            }
            x[i] = off + 1.0;
        }
    } else {
        // A positive start is orthogonal to the top eigenvector of L on
        // regular graphs, so use a Weyl sequence instead.
        const double golden = 0.6180339887498949;
        for (int i = 0; i < n; ++i) {
            const double frac = std::fmod((i + 1) * golden, 1.0);
            x[i] = frac - 0.5 + 1.0 / (2.0 + i);
        }
    }
    normalize(x);
    return x;
}

SpectralResult dense_fallback(const SymMatrix& m, double tol, long iterations) {
    const Eigensystem es = jacobi_eigensystem(m);
    SpectralResult out;
    out.value = es.values.back();
    out.vector = es.vectors.back();
    normalize(out.vector);
    orient(out.vector);
    out.residual = residual_inf(m, out.vector, out.value);
    out.iterations = iterations;
    out.used_fallback = true;
    if (!std::isfinite(out.value) || out.residual > std::max(tol, 1e-8)) {
        throw NumericalFailure("largest_eigenvalue: power iteration and Jacobi fallback both failed");
    }
    return out;
}

template <typename MatrixOf>
double component_radius(const Graph& g, const SolverOptions& options, MatrixOf&& matrix_of) {
    double best = 0.0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        const Graph piece = induced_subgraph(g, comp);
        best = std::max(best, largest_eigenvalue(matrix_of(piece), options).value);
    }
    return best;
}

}  // namespace

SymMatrix adjacency_matrix(const Graph& g) { return graph_matrix(g, DiagonalSign::none); }
SymMatrix laplacian_matrix(const Graph& g) { return graph_matrix(g, DiagonalSign::minus); }
SymMatrix signless_laplacian_matrix(const Graph& g) { return graph_matrix(g, DiagonalSign::plus); }

SpectralResult largest_eigenvalue(const SymMatrix& m, const SolverOptions& options) {
    if (!(options.tol > 0.0)) throw InvalidArgument("solver tolerance must be positive");
    const int n = m.order();
    if (n == 0) throw InvalidArgument("largest_eigenvalue of an empty matrix");

    // Below this the residual is dominated by rounding in M x.
    const double tol = std::max(options.tol, 1e3 * std::numeric_limits<double>::epsilon() * inf_norm(m));

    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) radius += std::abs(m(i, j));
        }
        shift = std::max(shift, radius - m(i, i));
    }

    std::vector<double> x = start_vector(m);
    std::vector<double> mx(static_cast<std::size_t>(n));
    for (long it = 1; it <= options.max_iterations; ++it) {
        m.multiply(x, mx);
        const double lambda = std::inner_product(x.begin(), x.end(), mx.begin(), 0.0);
        double residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(mx[i] - lambda * x[i]));
        if (residual <= tol) {
            orient(x);
            SpectralResult out;
            out.value = lambda;
            out.vector = std::move(x);
            out.residual = residual;
            out.iterations = it;
            return out;
        }
        for (int i = 0; i < n; ++i) x[i] = mx[i] + shift * x[i];
        const double norm = norm2(x);
        if (!(norm > 0.0) || !std::isfinite(norm)) break;
        for (double& xi : x) xi /= norm;
    }
    return dense_fallback(m, tol, options.max_iterations);
}

double q_max(const Graph& g, const SolverOptions& options) {
    return component_radius(g, options, [](const Graph& h) { return signless_laplacian_matrix(h); });
}

double mu_max(const Graph& g, const SolverOptions& options) {
    return component_radius(g, options, [](const Graph& h) { return laplacian_matrix(h); });
}

double rho_max(const Graph& g, const SolverOptions& options) {
    return component_radius(g, options, [](const Graph& h) { return adjacency_matrix(h); });
}

SpectralResult perron_vector(const Graph& g, const SolverOptions& options) {
    if (g.order() == 0) throw InvalidArgument("perron_vector of the empty graph");
    if (!is_connected(g)) throw DisconnectedGraph("perron_vector: graph is disconnected");
    SpectralResult out;
    if (g.order() == 1) {
        out.vector = {1.0};
    } else {
        out = largest_eigenvalue(signless_laplacian_matrix(g), options);
    }
    out.max_vertex = static_cast<int>(std::max_element(out.vector.begin(), out.vector.end()) - out.vector.begin());
    return out;
}

Eigensystem jacobi_eigensystem(const SymMatrix& m) {
    const int n = m.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
        v[i * n + i] = 1.0;
    }
    auto at = [&](std::vector<double>& mat, int i, int j) -> double& { return mat[static_cast<std::size_t>(i) * n + j]; };

    const double threshold = 1e-12;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(a, p, q)));
        }
        if (off <= threshold) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                at(a, p, p) -= t * apq;
                at(a, q, q) += t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = at(a, r, p);
                        const double arq = at(a, r, q);
                        at(a, r, p) = c * arp - s * arq;
                        at(a, p, r) = at(a, r, p);
                        at(a, r, q) = s * arp + c * arq;
                        at(a, q, r) = at(a, r, q);
                    }
                    const double vrp = at(v, r, p);
                    const double vrq = at(v, r, q);
                    at(v, r, p) = c * vrp - s * vrq;
                    at(v, r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return at(a, x, x) < at(a, y, y); });

    Eigensystem out;
    for (int k : order) {
        out.values.push_back(at(a, k, k));
        std::vector<double> column(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) column[r] = at(v, r, k);
        out.vectors.push_back(std::move(column));
    }
    return out;
}

std::vector<double> dense_spectrum_oracle(const SymMatrix& m) { return jacobi_eigensystem(m).values; }

}  // namespace sqbound

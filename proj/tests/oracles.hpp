#pragma once

// Shared fixtures, seeded generators, and independent oracles for the tests.
// Oracles deliberately bypass the library's kernels: eigendecompositions come
// from Eigen, dense solves from a local Gaussian elimination, matrix powers
// from plain loops. Agreement between the two stacks is the point of most
// assertions.

#include "rankit/digraph.hpp"
#include "rankit/graph.hpp"
#include "rankit/linalg.hpp"
#include "rankit/problem.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

namespace testutil {

using rankit::Digraph;
using rankit::RankingProblem;
using rankit::linalg::Matrix;

// ---------------------------------------------------------------- fixtures

// Seven objects, seven decisive matches: a tree plus one triangle, degrees
// [1,1,2,2,3,3,2]. The exact least squares rating is known in closed form.
inline RankingProblem sample_tournament() {
    const std::size_t n = 7;
    RankingProblem p;
    p.objects = {"X1", "X2", "X3", "X4", "X5", "X6", "X7"};
    p.results = Matrix(n, n);
    p.matches = Matrix(n, n);
    const std::pair<int, int> wins[] = {{0, 2}, {2, 4}, {4, 5}, {4, 6}, {1, 3}, {3, 5}, {6, 5}};
    for (const auto& [i, j] : wins) {
        p.results(i, j) = 1.0;
        p.results(j, i) = -1.0;
        p.matches(i, j) = p.matches(j, i) = 1.0;
    }
    return p;
}

inline Digraph sample_tournament_digraph() {
    Digraph g;
    g.nodes = {"X1", "X2", "X3", "X4", "X5", "X6", "X7"};
    g.edges = {{0, 2}, {2, 4}, {4, 5}, {4, 6}, {1, 3}, {3, 5}, {6, 5}};
    return g;
}

inline std::vector<double> sample_exact_q() {
    return {38.0 / 21, 10.0 / 21, 17.0 / 21, -11.0 / 21, -4.0 / 21, -32.0 / 21, -18.0 / 21};
}

inline std::vector<double> sample_scores() { return {1, 1, 0, 0, 1, -3, 0}; }

// --------------------------------------------------------------- generators

// Random problem with integer match weights in [1, max_weight] and integer
// results bounded by them; `density` is the probability a pair is compared.
// A random spanning tree keeps the graph connected when requested.
inline RankingProblem random_problem(std::size_t n, std::mt19937& rng, double density = 0.5,
                                     int max_weight = 3, bool ensure_connected = true) {
    RankingProblem p;
    p.objects = rankit::default_labels(n);
    p.results = Matrix(n, n);
    p.matches = Matrix(n, n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, max_weight);

    const auto add_pair = [&](std::size_t i, std::size_t j) {
        const int m = weight(rng);
        std::uniform_int_distribution<int> result(-m, m);
        const int a = result(rng);
        p.matches(i, j) = p.matches(j, i) = m;
        p.results(i, j) = a;
        p.results(j, i) = -a;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (unit(rng) < density) add_pair(i, j);

    if (ensure_connected && n > 1) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t k = 1; k < n; ++k) {
            std::uniform_int_distribution<std::size_t> parent(0, k - 1);
            const std::size_t i = order[parent(rng)];
            const std::size_t j = order[k];
            if (p.matches(i, j) == 0.0) add_pair(i, j);
        }
    }
    return p;
}

inline RankingProblem random_connected_not_regular_bipartite(std::size_t n, std::mt19937& rng,
                                                             double density = 0.7) {
    for (;;) {
        RankingProblem p = random_problem(n, rng, density);
        const auto diag = rankit::analyze(p);
        if (diag.connected() && !diag.is_regular_bipartite) return p;
    }
}

// All pairs compared once, results in {-1, 0, 1}.
inline RankingProblem round_robin(std::size_t n, std::mt19937& rng) {
    RankingProblem p;
    p.objects = rankit::default_labels(n);
    p.results = Matrix(n, n);
    p.matches = Matrix(n, n);
    std::uniform_int_distribution<int> result(-1, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int a = result(rng);
            p.matches(i, j) = p.matches(j, i) = 1.0;
            p.results(i, j) = a;
            p.results(j, i) = -a;
        }
    return p;
}

// K_{t,t} with unit weights: the canonical regular bipartite graph.
inline RankingProblem complete_bipartite(std::size_t t, std::mt19937& rng) {
    const std::size_t n = 2 * t;
    RankingProblem p;
    p.objects = rankit::default_labels(n);
    p.results = Matrix(n, n);
    p.matches = Matrix(n, n);
    std::uniform_int_distribution<int> result(-1, 1);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = t; j < n; ++j) {
            const int a = result(rng);
            p.matches(i, j) = p.matches(j, i) = 1.0;
            p.results(i, j) = a;
            p.results(j, i) = -a;
        }
    return p;
}

// Cycle graph: 2-regular, bipartite exactly when n is even.
inline RankingProblem cycle_problem(std::size_t n, std::mt19937& rng) {
    RankingProblem p;
    p.objects = rankit::default_labels(n);
    p.results = Matrix(n, n);
    p.matches = Matrix(n, n);
    std::uniform_int_distribution<int> result(-1, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const int a = result(rng);
        p.matches(i, j) = p.matches(j, i) = 1.0;
        p.results(i, j) = a;
        p.results(j, i) = -a;
    }
    return p;
}

// Data that fits a latent rating exactly: a_ij = m_ij (q_i - q_j) / 2.
inline RankingProblem consistent_problem(std::size_t n, std::mt19937& rng,
                                         std::vector<double>* latent = nullptr) {
    RankingProblem p;
    p.objects = rankit::default_labels(n);
    p.results = Matrix(n, n);
    p.matches = Matrix(n, n);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::vector<double> q(n);
    for (double& v : q) v = value(rng);
    std::uniform_int_distribution<int> weight(1, 3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = weight(rng);
            const double a = m * (q[i] - q[j]) / 2.0; // |q_i - q_j| <= 2 keeps |a| <= m
            p.matches(i, j) = p.matches(j, i) = m;
            p.results(i, j) = a;
            p.results(j, i) = -a;
        }
    if (latent) *latent = std::move(q);
    return p;
}

inline Digraph random_digraph(std::size_t n, std::mt19937& rng, double density = 0.3) {
    Digraph g;
    g.nodes = rankit::default_labels(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && unit(rng) < density) g.edges.emplace_back(i, j);
    return g;
}

// ------------------------------------------------------------------ oracles

inline Eigen::MatrixXd to_eigen(const Matrix& a) {
    Eigen::MatrixXd out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

inline Matrix from_eigen(const Eigen::MatrixXd& a) {
    Matrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = a(i, j);
    return out;
}

// Moore-Penrose pseudoinverse through a full symmetric eigendecomposition.
inline Matrix pseudoinverse_sym(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a));
    const Eigen::VectorXd& vals = es.eigenvalues();
    const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    Eigen::VectorXd inverted(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        inverted[i] = std::fabs(vals[i]) > 1e-9 * scale ? 1.0 / vals[i] : 0.0;
    return from_eigen(es.eigenvectors() * inverted.asDiagonal() *
                      es.eigenvectors().transpose());
}

inline double max_eigenvalue_sym(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a));
    return es.eigenvalues().maxCoeff();
}

// Dense solve by Gaussian elimination with partial pivoting; no shared code
// with the library's Cholesky path.
inline std::vector<double> gaussian_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double sum = b[r];
        for (std::size_t c = r + 1; c < n; ++c) sum -= a(r, c) * x[c];
        x[r] = sum / a(r, r);
    }
    return x;
}

// y = M^k x by plain repeated multiplication.
inline std::vector<double> matrix_power_apply(const Matrix& m, std::size_t k,
                                              std::vector<double> x) {
    const std::size_t n = m.rows();
    std::vector<double> y(n);
    for (std::size_t step = 0; step < k; ++step) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) sum += m(i, j) * x[j];
            y[i] = sum;
        }
        x = y;
    }
    return x;
}

// Weighted squared residual summed over unordered pairs, both orientations
// written out.
inline double objective_oracle(const RankingProblem& p, const std::vector<double>& q) {
    double total = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = p.matches(i, j);
            if (m <= 0.0) continue;
            const double forward = 2.0 * p.results(i, j) / m - q[i] + q[j];
            const double backward = 2.0 * p.results(j, i) / m - q[j] + q[i];
            total += m * (forward * forward + backward * backward);
        }
    return total;
}

inline double inf_diff(const std::vector<double>& x, const std::vector<double>& y) {
    double out = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) out = std::max(out, std::fabs(x[i] - y[i]));
    return out;
}

inline bool matrices_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

} // namespace testutil

#include "rankit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace rankit {

namespace {

// Degrees are sums of real weights; comparisons between them tolerate the
// roundoff of those sums.
bool nearly_equal(double a, double b, double scale) {
    return std::fabs(a - b) <= 1e-9 * std::max(1.0, scale);
}

} // namespace

std::vector<double> degree_sequence(const linalg::Matrix& matches) {
    const std::size_t n = matches.rows();
    std::vector<double> degrees(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) d += matches(i, j);
        degrees[i] = d;
    }
    return degrees;
}

bool regular_degrees(const std::vector<double>& degrees) {
    double max_degree = 0.0;
    for (double d : degrees) max_degree = std::max(max_degree, d);
    for (double d : degrees)
        if (!nearly_equal(d, max_degree, max_degree)) return false;
    return true;
}

std::vector<std::vector<std::size_t>> connected_components(const linalg::Matrix& matches) {
    const std::size_t n = matches.rows();
    std::vector<int> component_of(n, -1);
    std::vector<std::vector<std::size_t>> components;

    for (std::size_t start = 0; start < n; ++start) {
        if (component_of[start] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        std::queue<std::size_t> frontier;
        frontier.push(start);
        component_of[start] = id;
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            components[id].push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || matches(u, v) <= 0.0) continue;
                if (component_of[v] < 0) {
                    component_of[v] = id;
                    frontier.push(v);
                }
            }
        }
    }
    for (auto& members : components) std::sort(members.begin(), members.end());
    return components;
}

std::optional<std::array<std::vector<std::size_t>, 2>> two_coloring(
    const linalg::Matrix& matches) {
    const std::size_t n = matches.rows();
    std::vector<int> color(n, -1);

    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || matches(u, v) <= 0.0) continue;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    frontier.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }

    std::array<std::vector<std::size_t>, 2> sides;
    for (std::size_t i = 0; i < n; ++i) sides[static_cast<std::size_t>(color[i])].push_back(i);
    return sides;
}

GraphDiagnostics analyze(const RankingProblem& problem) {
    GraphDiagnostics diag;
    diag.components = connected_components(problem.matches);
    diag.degrees = degree_sequence(problem.matches);
    for (double d : diag.degrees) diag.max_degree = std::max(diag.max_degree, d);
    diag.bipartition = two_coloring(problem.matches);

    diag.is_regular = regular_degrees(diag.degrees);
    diag.is_regular_bipartite =
        diag.is_regular && diag.bipartition.has_value() && diag.max_degree > 0.0;

    diag.mu1_estimate = linalg::largest_eigenvalue_sym(laplacian(problem), 1e-8, 10000);
    return diag;
}

BalancedMultigraph balanced_multigraph(const RankingProblem& problem) {
    BalancedMultigraph balanced;
    balanced.matches = problem.matches;
    const std::vector<double> degrees = degree_sequence(problem.matches);
    for (double d : degrees) balanced.max_degree = std::max(balanced.max_degree, d);
    balanced.loops.resize(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i)
        balanced.loops[i] = balanced.max_degree - degrees[i];
    return balanced;
}

} // namespace rankit

#include "rankit/digraph.hpp"

#include "rankit/errors.hpp"
#include "rankit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace rankit {

void validate(const Digraph& g) {
    const std::size_t n = g.size();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [from, to] : g.edges) {
        if (from >= n || to >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(from + 1) + ", " + std::to_string(to + 1) +
                                        ")");
        if (from == to)
            throw std::invalid_argument("self-loop at node " + std::to_string(from + 1));
        if (!seen.emplace(from, to).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(from + 1) + ", " +
                                        std::to_string(to + 1) + ")");
    }
}

std::vector<double> out_degrees(const Digraph& g) {
    std::vector<double> degrees(g.size(), 0.0);
    for (const auto& edge : g.edges) degrees[edge.first] += 1.0;
    return degrees;
}

RankingProblem digraph_to_ranking_problem(const Digraph& g, bool bidirectional_pair_counts_two) {
    validate(g);
    const std::size_t n = g.size();

    RankingProblem problem;
    problem.objects = g.nodes;
    problem.results = linalg::Matrix(n, n);
    problem.matches = linalg::Matrix(n, n);

    std::set<std::pair<std::size_t, std::size_t>> edges(g.edges.begin(), g.edges.end());
    std::set<std::pair<std::size_t, std::size_t>> done;
    for (const auto& [u, v] : edges) {
        const std::size_t i = std::min(u, v);
        const std::size_t j = std::max(u, v);
        if (!done.emplace(i, j).second) continue;
        const bool forward = edges.count({i, j}) > 0;
        const bool backward = edges.count({j, i}) > 0;
        // one match per compared pair; opposite edges cancel the result
        const double a = (forward && backward) ? 0.0 : (forward ? 1.0 : -1.0);
        const double m = (forward && backward && bidirectional_pair_counts_two) ? 2.0 : 1.0;
        problem.results(i, j) = a;
        problem.results(j, i) = -a;
        problem.matches(i, j) = m;
        problem.matches(j, i) = m;
    }
    return problem;
}

RatingVector positional_power(const Digraph& g, double tol, std::size_t max_iter,
                              std::optional<double> decay_denominator) {
    validate(g);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const std::size_t n = g.size();
    if (n == 0) throw EmptyProblem();

    const double a = decay_denominator.value_or(static_cast<double>(n));
    if (!(a > static_cast<double>(n - 1)))
        throw std::invalid_argument("decay denominator must exceed n - 1 for contraction");

    std::vector<std::vector<std::size_t>> beats(n);
    for (const auto& [from, to] : g.edges) beats[from].push_back(to);

    const std::vector<double> base = out_degrees(g);
    std::vector<double> p(n, 0.0), next(n);

    RatingVector out;
    out.objects = g.nodes;
    out.method = Method::PositionalPower;
    out.parameters["tol"] = tol;
    out.parameters["decay_denominator"] = a;

    for (std::size_t k = 1; k <= max_iter; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            double share = 0.0;
            for (std::size_t j : beats[i]) share += p[j];
            next[i] = base[i] + share / a;
        }
        const double delta = linalg::inf_norm_diff(next, p);
        p.swap(next);
        if (delta < tol) {
            out.values = std::move(p);
            return out;
        }
    }
    throw MaxIterationsExceeded(max_iter);
}

} // namespace rankit

#include "rankit/solvers.hpp"

#include "rankit/errors.hpp"
#include "rankit/graph.hpp"
#include "rankit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rankit {

namespace {

using linalg::Matrix;

void require_connected(const RankingProblem& problem) {
    auto components = connected_components(problem.matches);
    if (components.size() > 1)
        throw DisconnectedGraph(std::move(components), problem.objects);
}

// Weak order of a rating vector under exact ties, encoded comparably:
// object index and tie-group id per sorted position.
std::vector<std::size_t> ranking_signature(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<std::size_t> signature;
    signature.reserve(2 * order.size());
    std::size_t group = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && values[order[k - 1]] != values[order[k]]) ++group;
        signature.push_back(order[k]);
        signature.push_back(group);
    }
    return signature;
}

} // namespace

double grs_rounds(const RankingProblem& problem, std::optional<double> rounds) {
    if (rounds) {
        if (!(*rounds > 0.0)) throw std::invalid_argument("round count must be positive");
        return *rounds;
    }
    double max_m = 0.0;
    const std::size_t n = problem.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            max_m = std::max(max_m, problem.matches(i, j));
    return std::ceil(max_m);
}

RatingVector least_squares_direct(const RankingProblem& problem) {
    const std::size_t n = problem.size();
    if (n == 0) throw EmptyProblem();
    require_connected(problem);

    // L + (1/n)J is positive definite on a connected graph and shares the
    // zero-sum solution with the singular score equations.
    Matrix system = laplacian(problem);
    const double shift = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) system(i, j) += shift;

    const RatingVector s = scores(problem);
    std::vector<double> q = linalg::cholesky(system).solve(s.values);

    // Re-center exactly; L annihilates constants, so the residual is untouched.
    const double mean = std::accumulate(q.begin(), q.end(), 0.0) / static_cast<double>(n);
    for (double& v : q) v -= mean;

    RatingVector out;
    out.objects = problem.objects;
    out.values = std::move(q);
    out.method = Method::LeastSquaresDirect;
    return out;
}

IterativeResult least_squares_iterative(const RankingProblem& problem, double tol,
                                        std::size_t max_iter) {
    const std::size_t n = problem.size();
    if (n == 0) throw EmptyProblem();
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    require_connected(problem);

    const std::vector<double> degrees = degree_sequence(problem.matches);
    double dmax = 0.0;
    for (double d : degrees) dmax = std::max(dmax, d);
    if (regular_degrees(degrees) && dmax > 0.0 && two_coloring(problem.matches))
        throw RegularBipartiteGraph();

    IterativeResult result;
    result.ratings.objects = problem.objects;
    result.ratings.method = Method::LeastSquaresIterative;
    result.ratings.parameters["tol"] = tol;
    result.ratings.parameters["max_iter"] = static_cast<double>(max_iter);

    if (dmax == 0.0) { // one object, nothing to propagate
        result.ratings.values.assign(n, 0.0);
        result.trace.iterates.push_back(result.ratings.values);
        result.trace.converged_at = 0;
        result.trace.ranking_stable_at = 0;
        return result;
    }

    // P = (1/dmax) C, the transition matrix of the degree-balanced graph:
    // matches off the diagonal, loops dmax - d_i on it. Symmetric and doubly
    // stochastic, so repeated application redistributes strength along edges.
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = (i == j ? dmax - degrees[i] : problem.matches(i, j)) / dmax;

    const std::vector<double> s = scores(problem).values;
    std::vector<double> q(n), term = s, next(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = s[i] / dmax;

    IterationTrace& trace = result.trace;
    trace.iterates.push_back(q);
    std::vector<std::size_t> signature = ranking_signature(q);
    std::size_t stable_at = 0;

    if (linalg::inf_norm(q) < tol) {
        trace.converged_at = 0;
    } else {
        for (std::size_t k = 1; k <= max_iter; ++k) {
            linalg::matvec(p, term, next);
            term.swap(next);
            double delta = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double increment = term[i] / dmax;
                q[i] += increment;
                delta = std::max(delta, std::fabs(increment));
            }
            trace.iterates.push_back(q);
            trace.step_deltas.push_back(delta);
            std::vector<std::size_t> next_signature = ranking_signature(q);
            if (next_signature != signature) {
                stable_at = k;
                signature = std::move(next_signature);
            }
            if (delta < tol) {
                trace.converged_at = k;
                break;
            }
        }
    }

    trace.ranking_stable_at = stable_at;
    result.ratings.values = trace.iterates.back();
    return result;
}

RatingVector generalized_row_sum(const RankingProblem& problem, double epsilon,
                                 std::optional<double> rounds) {
    const std::size_t n = problem.size();
    if (n == 0) throw EmptyProblem();
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");

    const double m = grs_rounds(problem, rounds);
    RatingVector out;
    out.objects = problem.objects;
    out.method = Method::GeneralizedRowSum;
    out.parameters["epsilon"] = epsilon;
    out.parameters["rounds"] = m;

    const RatingVector s = scores(problem);
    if (epsilon == 0.0) { // identity system, the scores verbatim
        out.values = s.values;
        return out;
    }

    // I + epsilon L is positive definite for every problem, connected or not.
    Matrix system = laplacian(problem);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) system(i, j) *= epsilon;
        system(i, i) += 1.0;
    }
    std::vector<double> rhs(n);
    const double scale = 1.0 + epsilon * m * static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = scale * s.values[i];

    out.values = linalg::cholesky(system).solve(rhs);
    return out;
}

RatingVector grs_series(const RankingProblem& problem, double epsilon, std::size_t k_max,
                        std::optional<double> rounds) {
    const std::size_t n = problem.size();
    if (n == 0) throw EmptyProblem();
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");

    const Matrix l = laplacian(problem);
    const double mu1 = linalg::largest_eigenvalue_sym(l);
    if (mu1 > 0.0) {
        const double limit = 0.99 / mu1;
        if (epsilon >= limit) throw EpsilonTooLarge(epsilon, limit);
    }

    const double m = grs_rounds(problem, rounds);
    const std::vector<double> s = scores(problem).values;

    // Partial sum of sum_k epsilon^k (-L)^k s; the common factor 1 + epsilon m n
    // is applied once at the end.
    std::vector<double> acc = s, term = s, next(n);
    for (std::size_t k = 1; k <= k_max; ++k) {
        linalg::matvec(l, term, next);
        for (std::size_t i = 0; i < n; ++i) {
            term[i] = -epsilon * next[i];
            acc[i] += term[i];
        }
    }
    const double scale = 1.0 + epsilon * m * static_cast<double>(n);
    for (double& v : acc) v *= scale;

    RatingVector out;
    out.objects = problem.objects;
    out.values = std::move(acc);
    out.method = Method::GrsSeries;
    out.parameters["epsilon"] = epsilon;
    out.parameters["rounds"] = m;
    out.parameters["k_max"] = static_cast<double>(k_max);
    return out;
}

Ranking ranking_from_ratings(const RatingVector& ratings, double tie_tol) {
    if (tie_tol < 0.0) throw std::invalid_argument("tie_tol must be nonnegative");
    if (ratings.objects.size() != ratings.values.size())
        throw std::invalid_argument("ratings carry a label per value");

    const std::size_t n = ratings.values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ratings.values[a] > ratings.values[b]; });

    Ranking out;
    out.tie_tolerance = tie_tol;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 ||
            ratings.values[order[k - 1]] - ratings.values[order[k]] > tie_tol)
            groups.emplace_back();
        groups.back().push_back(order[k]);
    }
    for (auto& members : groups) {
        std::sort(members.begin(), members.end()); // input order inside a tie group
        auto& labels = out.groups.emplace_back();
        for (std::size_t i : members) labels.push_back(ratings.objects[i]);
    }
    return out;
}

} // namespace rankit

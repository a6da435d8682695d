#pragma once

#include "rankit/problem.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rankit {

/// Record of a score-propagation run: every iterate, the sup-norm of every
/// step, the step at which the increment dropped below tolerance (absent when
/// the cap was hit first), and the first step from which the induced ranking
/// never changes again.
struct IterationTrace {
    std::vector<std::vector<double>> iterates; // iterates[k] is the k-th rating vector
    std::vector<double> step_deltas;           // step_deltas[k-1] = sup-norm of step k
    std::optional<std::size_t> converged_at;
    std::optional<std::size_t> ranking_stable_at;
};

struct IterativeResult {
    RatingVector ratings;
    IterationTrace trace;
};

/// Least squares rating: the zero-sum solution of the score equations on the
/// comparison graph, via one symmetric positive definite solve of the
/// rank-repaired system.
/// Throws DisconnectedGraph when no unique solution exists.
RatingVector least_squares_direct(const RankingProblem& problem);

/// Least squares rating as the limit of score propagation on the balanced
/// comparison graph: starting from the scaled scores, each step adds the
/// strength of objects reachable on one more edge. Stops once the step
/// sup-norm falls below `tol`; a cap hit leaves `converged_at` empty and
/// returns the partial trace.
/// The step weight is fixed at one over the maximal comparison count; other
/// uniform weights (one over the total number of matches, say) yield
/// different rating methods and are out of scope here.
/// Throws DisconnectedGraph or RegularBipartiteGraph when the expansion does
/// not apply (the direct solver still does).
IterativeResult least_squares_iterative(const RankingProblem& problem, double tol = 1e-10,
                                        std::size_t max_iter = 100000);

/// Generalized row sum rating: scores corrected by opponent strength with
/// coupling epsilon. Defined for every problem, connected or not; reduces to
/// the scores at epsilon = 0 and induces the least squares ranking as
/// epsilon grows.
/// `rounds` overrides the round count m; by default m is the largest match
/// count, rounded up.
RatingVector generalized_row_sum(const RankingProblem& problem, double epsilon,
                                 std::optional<double> rounds = std::nullopt);

/// The round count m the generalized row sum will use: the override when
/// given (must be positive), otherwise the largest match count rounded up.
double grs_rounds(const RankingProblem& problem, std::optional<double> rounds = std::nullopt);

/// Truncated power-series form of the generalized row sum, valid for
/// epsilon below the reciprocal of the largest Laplacian eigenvalue.
/// Converges to generalized_row_sum as k_max grows; kept for verification
/// and illustration, the direct solve is the production path.
/// Throws EpsilonTooLarge outside the convergence range (1% safety margin
/// against the spectral estimate).
RatingVector grs_series(const RankingProblem& problem, double epsilon, std::size_t k_max,
                        std::optional<double> rounds = std::nullopt);

/// Weak order induced by a rating vector: sorted descending, consecutive
/// values within `tie_tol` of each other share a group. Objects inside a
/// group keep their input order.
Ranking ranking_from_ratings(const RatingVector& ratings, double tie_tol = 1e-9);

} // namespace rankit

#pragma once

#include "rankit/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rankit {

/// One round of paired comparisons. Outcomes live in [0,1] and are defined
/// only for the pairs actually compared; setting (i, j) fixes (j, i) to the
/// complementary value. The diagonal is never defined.
class RoundMatrix {
public:
    explicit RoundMatrix(std::size_t n) : n_(n) {}

    std::size_t size() const { return n_; }

    /// Records outcome r for (i, j) and 1 - r for (j, i).
    /// Throws std::invalid_argument on i == j, an out-of-range index,
    /// an outcome outside [0,1], or a pair that is already defined.
    void set(std::size_t i, std::size_t j, double result);

    bool defined(std::size_t i, std::size_t j) const;
    double result(std::size_t i, std::size_t j) const;

    /// Defined pairs keyed (min, max) with the outcome of min against max.
    const std::map<std::pair<std::size_t, std::size_t>, double>& entries() const {
        return entries_;
    }

private:
    std::size_t n_;
    std::map<std::pair<std::size_t, std::size_t>, double> entries_;
};

/// A set of objects with aggregated comparison data: `results` is the
/// skew-symmetric wins-minus-losses matrix, `matches` the symmetric
/// nonnegative comparison-count matrix. Match weights may be any nonnegative
/// reals, not only integers. Instances are treated as immutable once built.
struct RankingProblem {
    std::vector<std::string> objects;
    linalg::Matrix results;            // a(i,j) = wins of i over j minus losses
    linalg::Matrix matches;            // m(i,j) = comparisons between i and j
    std::optional<double> rounds;      // round count, when the source knows it

    std::size_t size() const { return objects.size(); }
};

enum class Method {
    Score,
    GeneralizedRowSum,
    LeastSquaresDirect,
    LeastSquaresIterative,
    GrsSeries,
    PositionalPower,
};

std::string_view to_string(Method method);

/// A rating per object together with the method and parameters that
/// produced it.
struct RatingVector {
    std::vector<std::string> objects;
    std::vector<double> values;
    Method method = Method::Score;
    std::map<std::string, double> parameters;
};

/// A weak order over the objects: tie groups listed best first.
struct Ranking {
    std::vector<std::vector<std::string>> groups;
    double tie_tolerance = 0.0;

    /// "A > B = C > D" style rendering.
    std::string to_string() const;
};

enum class ViolationKind {
    ResultNotSkewSymmetric,
    NonzeroResultDiagonal,
    MatchesNotSymmetric,
    NonzeroMatchesDiagonal,
    NegativeMatches,
    ResultExceedsMatches,
    ResultWithoutMatch,
};

struct Violation {
    ViolationKind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string message;
};

/// Sums per-round outcomes into a single problem: each compared pair
/// contributes its centered outcome to `results` and one match to `matches`.
/// Labels default to X1..Xn when none are given.
/// Throws std::invalid_argument on a dimension mismatch across rounds.
RankingProblem aggregate(const std::vector<RoundMatrix>& rounds,
                         std::vector<std::string> labels = {});

/// Row sums of the results matrix (the scores vector). Exactly zero-sum by
/// skew-symmetry.
RatingVector scores(const RankingProblem& problem);

/// Laplacian of the comparison graph: degrees on the diagonal, negated match
/// counts off it. Rows and columns sum to zero; positive semidefinite.
linalg::Matrix laplacian(const RankingProblem& problem);

/// Weighted squared deviation between observed per-match score differences
/// and the differences implied by q, summed over ordered compared pairs.
/// A diagnostic: zero exactly on consistent data, invariant under adding a
/// constant to q.
double objective_value(const RankingProblem& problem, std::span<const double> q);

/// Checks every structural invariant of the problem and reports each failure
/// with its indices. Empty means the problem is well formed.
std::vector<Violation> validate(const RankingProblem& problem);

/// X1..Xn.
std::vector<std::string> default_labels(std::size_t n);

} // namespace rankit

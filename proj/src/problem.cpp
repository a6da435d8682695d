#include "rankit/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rankit {

void RoundMatrix::set(std::size_t i, std::size_t j, double result) {
    if (i >= n_ || j >= n_) throw std::invalid_argument("object index out of range");
    if (i == j) throw std::invalid_argument("an object cannot be compared with itself");
    if (!(result >= 0.0 && result <= 1.0))
        throw std::invalid_argument("comparison outcome must lie in [0,1]");
    const std::pair<std::size_t, std::size_t> key = std::minmax(i, j);
    if (entries_.count(key))
        throw std::invalid_argument("pair compared twice within one round");
    entries_[key] = (i < j) ? result : 1.0 - result;
}

bool RoundMatrix::defined(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    const std::pair<std::size_t, std::size_t> key = std::minmax(i, j);
    return entries_.count(key) > 0;
}

double RoundMatrix::result(std::size_t i, std::size_t j) const {
    const std::pair<std::size_t, std::size_t> key = std::minmax(i, j);
    const double r = entries_.at(key);
    return (i < j) ? r : 1.0 - r;
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Score: return "score";
        case Method::GeneralizedRowSum: return "grs";
        case Method::LeastSquaresDirect: return "least-squares-direct";
        case Method::LeastSquaresIterative: return "least-squares-iterative";
        case Method::GrsSeries: return "grs-series";
        case Method::PositionalPower: return "positional-power";
    }
    return "unknown";
}

std::string Ranking::to_string() const {
    std::ostringstream out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (g > 0) out << " > ";
        for (std::size_t k = 0; k < groups[g].size(); ++k) {
            if (k > 0) out << " = ";
            out << groups[g][k];
        }
    }
    return out.str();
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
    return labels;
}

RankingProblem aggregate(const std::vector<RoundMatrix>& rounds, std::vector<std::string> labels) {
    std::size_t n = labels.size();
    if (!rounds.empty()) {
        n = rounds.front().size();
        for (const RoundMatrix& round : rounds)
            if (round.size() != n)
                throw std::invalid_argument("rounds disagree on the number of objects");
    }
    if (labels.empty())
        labels = default_labels(n);
    else if (labels.size() != n)
        throw std::invalid_argument("label count does not match round dimension");

    RankingProblem problem;
    problem.objects = std::move(labels);
    problem.results = linalg::Matrix(n, n);
    problem.matches = linalg::Matrix(n, n);
    problem.rounds = static_cast<double>(rounds.size());

    for (const RoundMatrix& round : rounds) {
        for (const auto& [pair, r] : round.entries()) {
            const auto [i, j] = pair;
            const double centered = r - (1.0 - r); // outcome minus its complement
            problem.results(i, j) += centered;
            problem.results(j, i) += -centered;
            problem.matches(i, j) += 1.0;
            problem.matches(j, i) += 1.0;
        }
    }
    return problem;
}

RatingVector scores(const RankingProblem& problem) {
    const std::size_t n = problem.size();
    RatingVector rating;
    rating.objects = problem.objects;
    rating.method = Method::Score;
    rating.values.resize(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += problem.results(i, j);
        rating.values[i] = sum;
    }
    return rating;
}

linalg::Matrix laplacian(const RankingProblem& problem) {
    const std::size_t n = problem.size();
    linalg::Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double m = problem.matches(i, j);
            l(i, j) = -m;
            degree += m;
        }
        l(i, i) = degree;
    }
    return l;
}

double objective_value(const RankingProblem& problem, std::span<const double> q) {
    const std::size_t n = problem.size();
    if (q.size() != n) throw std::invalid_argument("rating vector has wrong length");
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double m = problem.matches(i, j);
            if (m <= 0.0) continue;
            const double observed = 2.0 * problem.results(i, j) / m;
            const double residual = observed - q[i] + q[j];
            total += m * residual * residual;
        }
    }
    return total;
}

std::vector<Violation> validate(const RankingProblem& problem) {
    const std::size_t n = problem.size();
    std::vector<Violation> violations;
    auto report = [&](ViolationKind kind, std::size_t i, std::size_t j, std::string message) {
        violations.push_back({kind, i, j, std::move(message)});
    };
    auto at = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (problem.results(i, i) != 0.0)
            report(ViolationKind::NonzeroResultDiagonal, i, i,
                   "results diagonal must be zero at " + at(i, i));
        if (problem.matches(i, i) != 0.0)
            report(ViolationKind::NonzeroMatchesDiagonal, i, i,
                   "matches diagonal must be zero at " + at(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const double aij = problem.results(i, j);
            const double mij = problem.matches(i, j);
            if (problem.results(j, i) != -aij)
                report(ViolationKind::ResultNotSkewSymmetric, i, j,
                       "results matrix is not skew-symmetric at " + at(i, j));
            if (problem.matches(j, i) != mij)
                report(ViolationKind::MatchesNotSymmetric, i, j,
                       "matches matrix is not symmetric at " + at(i, j));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double aij = problem.results(i, j);
            const double mij = problem.matches(i, j);
            if (mij < 0.0)
                report(ViolationKind::NegativeMatches, i, j,
                       "match count is negative at " + at(i, j));
            else if (mij == 0.0 && aij != 0.0)
                report(ViolationKind::ResultWithoutMatch, i, j,
                       "nonzero result with no matches at " + at(i, j));
            else if (std::fabs(aij) > mij)
                report(ViolationKind::ResultExceedsMatches, i, j,
                       "result magnitude exceeds match count at " + at(i, j));
        }
    }
    return violations;
}

} // namespace rankit

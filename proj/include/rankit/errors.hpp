#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankit {

/// Base class for all errors raised by the library.
class RankingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The comparison graph splits into several components, so a single common
/// rating scale does not exist. Carries the component partition (object
/// indices) for reporting.
class DisconnectedGraph : public RankingError {
public:
    DisconnectedGraph(std::vector<std::vector<std::size_t>> components,
                      const std::vector<std::string>& labels);

    const std::vector<std::vector<std::size_t>>& components() const { return components_; }

private:
    std::vector<std::vector<std::size_t>> components_;
};

/// The comparison graph is regular bipartite: the score-propagation iteration
/// oscillates instead of converging. The direct solver still applies.
class RegularBipartiteGraph : public RankingError {
public:
    RegularBipartiteGraph()
        : RankingError("comparison graph is regular bipartite; "
                       "the iterative solver does not converge here, use the direct solver") {}
};

class MaxIterationsExceeded : public RankingError {
public:
    explicit MaxIterationsExceeded(std::size_t max_iter)
        : RankingError("iteration did not converge within " + std::to_string(max_iter) + " steps"),
          max_iter_(max_iter) {}

    std::size_t max_iter() const { return max_iter_; }

private:
    std::size_t max_iter_;
};

/// The series parameter lies outside the convergence radius 1/mu1.
class EpsilonTooLarge : public RankingError {
public:
    EpsilonTooLarge(double epsilon, double limit);

    double epsilon() const { return epsilon_; }
    double limit() const { return limit_; }

private:
    double epsilon_;
    double limit_;
};

/// Malformed input text; line numbers are 1-based and count the header.
class ParseError : public RankingError {
public:
    ParseError(std::size_t line, const std::string& what)
        : RankingError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyProblem : public RankingError {
public:
    EmptyProblem() : RankingError("input defines no objects") {}
};

} // namespace rankit

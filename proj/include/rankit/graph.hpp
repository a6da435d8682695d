#pragma once

#include "rankit/linalg.hpp"
#include "rankit/problem.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace rankit {

/// Structural summary of the comparison graph. Edges exist wherever the
/// match count is positive; the weight only enters degrees and the spectrum.
struct GraphDiagnostics {
    std::vector<std::vector<std::size_t>> components; // object indices per component
    std::vector<double> degrees;                      // total comparisons per object
    double max_degree = 0.0;
    std::optional<std::array<std::vector<std::size_t>, 2>> bipartition;
    bool is_regular = false;
    bool is_regular_bipartite = false;
    double mu1_estimate = 0.0; // largest Laplacian eigenvalue, power-iteration estimate

    bool connected() const { return components.size() == 1; }
};

/// The comparison graph with enough loops added at each node to equalize all
/// degrees at the maximum. At least one node (any of maximal degree) gets no
/// loops.
struct BalancedMultigraph {
    std::vector<double> loops; // max_degree - degree, per object
    linalg::Matrix matches;
    double max_degree = 0.0;
};

std::vector<double> degree_sequence(const linalg::Matrix& matches);

/// True when every degree equals the maximum, within the roundoff tolerance
/// of summed real weights.
bool regular_degrees(const std::vector<double>& degrees);

/// Connected components of the positive-match edge set, each sorted, ordered
/// by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const linalg::Matrix& matches);

/// Two-coloring of the positive-match edge set, or nullopt when an odd cycle
/// exists. Isolated nodes land in the first side.
std::optional<std::array<std::vector<std::size_t>, 2>> two_coloring(const linalg::Matrix& matches);

GraphDiagnostics analyze(const RankingProblem& problem);

BalancedMultigraph balanced_multigraph(const RankingProblem& problem);

} // namespace rankit

#pragma once

#include "rankit/problem.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankit {

/// A directed graph without self-loops or duplicate edges. Edges are ordered
/// (winner, loser) pairs of node indices.
struct Digraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t size() const { return nodes.size(); }
};

/// Checks the structural invariants; throws std::invalid_argument on a
/// self-loop, an out-of-range endpoint, or a duplicate edge.
void validate(const Digraph& g);

std::vector<double> out_degrees(const Digraph& g);

/// Reads a digraph as a tournament: an edge (i, j) is a win of i over j.
/// One directed edge gives a_ij = 1 and m_ij = 1; edges both ways cancel to
/// a_ij = 0 and count as one match, or as two when
/// `bidirectional_pair_counts_two` is set.
RankingProblem digraph_to_ranking_problem(const Digraph& g,
                                          bool bidirectional_pair_counts_two = false);

/// Positional power: the limit of p <- T e + (1/a) T p from p = 0, where T is
/// the adjacency matrix and a defaults to the node count. Each node earns its
/// out-degree plus a discounted share of the power of the nodes it beats.
/// The map is a contraction for a > n - 1, so the sequence always converges.
/// Throws MaxIterationsExceeded if tol is not reached in max_iter steps and
/// std::invalid_argument when a <= n - 1.
RatingVector positional_power(const Digraph& g, double tol = 1e-10, std::size_t max_iter = 10000,
                              std::optional<double> decay_denominator = std::nullopt);

} // namespace rankit

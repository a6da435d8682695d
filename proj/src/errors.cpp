#include "rankit/errors.hpp"

#include <sstream>
#include <utility>

namespace rankit {

namespace {

std::string describe_components(const std::vector<std::vector<std::size_t>>& components,
                                const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "comparison graph is disconnected (" << components.size() << " components): ";
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (c > 0) out << " | ";
        out << '{';
        for (std::size_t k = 0; k < components[c].size(); ++k) {
            if (k > 0) out << ", ";
            const std::size_t i = components[c][k];
            if (i < labels.size())
                out << labels[i];
            else
                out << '#' << i + 1;
        }
        out << '}';
    }
    return out.str();
}

std::string describe_epsilon(double epsilon, double limit) {
    std::ostringstream out;
    out << "epsilon " << epsilon << " is at or beyond the series convergence bound " << limit
        << "; use the direct generalized row sum instead";
    return out.str();
}

} // namespace

DisconnectedGraph::DisconnectedGraph(std::vector<std::vector<std::size_t>> components,
                                     const std::vector<std::string>& labels)
    : RankingError(describe_components(components, labels)), components_(std::move(components)) {}

EpsilonTooLarge::EpsilonTooLarge(double epsilon, double limit)
    : RankingError(describe_epsilon(epsilon, limit)), epsilon_(epsilon), limit_(limit) {}

} // namespace rankit

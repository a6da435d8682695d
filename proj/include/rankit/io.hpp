#pragma once

#include "rankit/digraph.hpp"
#include "rankit/graph.hpp"
#include "rankit/problem.hpp"
#include "rankit/solvers.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankit::io {

/// CSV dialect: comma-separated, no quoting, labels may not contain commas.
/// Leading/trailing whitespace around fields is ignored, as are blank lines.
/// Line numbers in errors are 1-based and count the header line.

enum class InputFormat { Rounds, Aggregated, Digraph };

/// Identifies the dialect from the header line, or nullopt when the header
/// matches none of them.
std::optional<InputFormat> detect_format(std::string_view text);

struct ParsedRounds {
    std::vector<std::string> objects; // order of first appearance
    std::vector<RoundMatrix> rounds;  // order of first appearance of round ids
};

/// Header `round,object_i,object_j,result`, one comparison per row, outcomes
/// in [0,1]. A pair may appear at most once per round, in either orientation.
/// Throws EmptyProblem when no data rows follow the header.
ParsedRounds parse_rounds_csv(std::string_view text);

/// Header `object_i,object_j,a_ij,m_ij`, one unordered pair per row with
/// |a_ij| <= m_ij; unlisted pairs stay at zero. Throws EmptyProblem when no
/// data rows follow the header.
RankingProblem parse_aggregated_csv(std::string_view text);

/// Header `from,to`, one directed edge per row; nodes are the endpoint
/// labels in order of first appearance. Self-loops and repeated edges are
/// rejected. Throws EmptyProblem when no data rows follow the header.
Digraph parse_digraph_csv(std::string_view text);

/// Emits every unordered pair in label order, so parsing the result yields
/// the identical problem, isolated objects included. Values are written in
/// shortest round-trip form.
std::string to_aggregated_csv(const RankingProblem& problem);

/// Columns `step,<one per object>,delta`; the delta cell of step 0 is empty.
/// Values are written in shortest round-trip form, so the table reproduces
/// the trace exactly.
std::string trace_to_csv(const IterationTrace& trace, const std::vector<std::string>& objects);

/// JSON documents below use insertion-ordered keys and values rounded to 12
/// significant digits, making output byte-stable for a fixed input.

nlohmann::ordered_json rating_document(const RatingVector& ratings, const Ranking& ranking);

/// rating_document plus an "iteration" block (steps, converged_at,
/// ranking_stable_at, final_delta).
nlohmann::ordered_json iteration_document(const IterativeResult& result, const Ranking& ranking);

nlohmann::ordered_json diagnostics_document(const RankingProblem& problem,
                                            const GraphDiagnostics& diagnostics,
                                            const BalancedMultigraph& balanced);

/// Plain-text table of several ratings side by side, one object per row,
/// followed by one ranking line per method.
std::string comparison_table(const std::vector<std::string>& objects,
                             const std::vector<RatingVector>& columns, double tie_tol);

} // namespace rankit::io

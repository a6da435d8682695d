#include "rankit/io.hpp"

#include "rankit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace rankit::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t end = line.find(',', start);
        if (end == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, end - start)));
        start = end + 1;
    }
    return fields;
}

bool header_matches(std::string_view line, const std::vector<std::string_view>& expected) {
    const auto fields = split_fields(line);
    return std::equal(fields.begin(), fields.end(), expected.begin(), expected.end());
}

void require_header(const std::vector<std::string_view>& lines,
                    const std::vector<std::string_view>& expected) {
    if (!lines.empty() && header_matches(lines[0], expected)) return;
    std::string joined;
    for (std::string_view h : expected) {
        if (!joined.empty()) joined += ',';
        joined += h;
    }
    throw ParseError(1, "expected header `" + joined + "`");
}

double parse_real(std::string_view field, std::size_t line, const char* what) {
    std::string_view body = field;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size() ||
        !std::isfinite(value))
        throw ParseError(line, std::string(what) + " is not a finite number: '" +
                                   std::string(field) + "'");
    return value;
}

// Interns labels in order of first appearance.
struct LabelTable {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> index;

    std::size_t intern(std::string_view label, std::size_t line, const char* what) {
        if (label.empty()) throw ParseError(line, std::string(what) + " label is empty");
        if (const auto it = index.find(label); it != index.end()) return it->second;
        const std::size_t id = labels.size();
        labels.emplace_back(label);
        index.emplace(labels.back(), id);
        return id;
    }
};

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double round_sig(double v) {
    if (!std::isfinite(v)) return v;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_values(const std::vector<double>& values) {
    auto out = nlohmann::ordered_json::array();
    for (double v : values) out.push_back(round_sig(v));
    return out;
}

nlohmann::ordered_json json_labels(const std::vector<std::vector<std::size_t>>& groups,
                                   const std::vector<std::string>& labels) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& group : groups) {
        auto members = nlohmann::ordered_json::array();
        for (std::size_t i : group) members.push_back(labels[i]);
        out.push_back(std::move(members));
    }
    return out;
}

const std::vector<std::string_view> kRoundsHeader = {"round", "object_i", "object_j", "result"};
const std::vector<std::string_view> kAggregatedHeader = {"object_i", "object_j", "a_ij", "m_ij"};
const std::vector<std::string_view> kDigraphHeader = {"from", "to"};

} // namespace

std::optional<InputFormat> detect_format(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) return std::nullopt;
    if (header_matches(lines[0], kRoundsHeader)) return InputFormat::Rounds;
    if (header_matches(lines[0], kAggregatedHeader)) return InputFormat::Aggregated;
    if (header_matches(lines[0], kDigraphHeader)) return InputFormat::Digraph;
    return std::nullopt;
}

ParsedRounds parse_rounds_csv(std::string_view text) {
    const auto lines = split_lines(text);
    require_header(lines, kRoundsHeader);

    LabelTable objects;
    LabelTable round_ids;
    struct Entry {
        std::size_t round, i, j;
        double result;
    };
    std::vector<Entry> entries;
    std::vector<std::set<std::pair<std::size_t, std::size_t>>> seen;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t line = k + 1;
        if (trim(lines[k]).empty()) continue;
        const auto fields = split_fields(lines[k]);
        if (fields.size() != 4)
            throw ParseError(line, "expected 4 fields, got " + std::to_string(fields.size()));

        const std::size_t round = round_ids.intern(fields[0], line, "round");
        const std::size_t i = objects.intern(fields[1], line, "object");
        const std::size_t j = objects.intern(fields[2], line, "object");
        if (i == j)
            throw ParseError(line, "object '" + std::string(fields[1]) +
                                       "' is compared with itself");
        const double result = parse_real(fields[3], line, "result");
        if (!(result >= 0.0 && result <= 1.0))
            throw ParseError(line, "result must lie in [0,1]");

        if (seen.size() <= round) seen.resize(round + 1);
        if (!seen[round].emplace(std::min(i, j), std::max(i, j)).second)
            throw ParseError(line, "pair already recorded in round '" +
                                       round_ids.labels[round] + "'");
        entries.push_back({round, i, j, result});
    }
    if (objects.labels.empty()) throw EmptyProblem();

    ParsedRounds parsed;
    parsed.objects = objects.labels;
    parsed.rounds.reserve(round_ids.labels.size());
    for (std::size_t r = 0; r < round_ids.labels.size(); ++r)
        parsed.rounds.emplace_back(parsed.objects.size());
    for (const Entry& e : entries) parsed.rounds[e.round].set(e.i, e.j, e.result);
    return parsed;
}

RankingProblem parse_aggregated_csv(std::string_view text) {
    const auto lines = split_lines(text);
    require_header(lines, kAggregatedHeader);

    LabelTable objects;
    struct Entry {
        std::size_t i, j;
        double a, m;
    };
    std::vector<Entry> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t line = k + 1;
        if (trim(lines[k]).empty()) continue;
        const auto fields = split_fields(lines[k]);
        if (fields.size() != 4)
            throw ParseError(line, "expected 4 fields, got " + std::to_string(fields.size()));

        const std::size_t i = objects.intern(fields[0], line, "object");
        const std::size_t j = objects.intern(fields[1], line, "object");
        if (i == j)
            throw ParseError(line, "object '" + std::string(fields[0]) +
                                       "' is paired with itself");
        const double a = parse_real(fields[2], line, "a_ij");
        const double m = parse_real(fields[3], line, "m_ij");
        if (m < 0.0) throw ParseError(line, "m_ij must be nonnegative");
        if (!(std::fabs(a) <= m))
            throw ParseError(line, "|a_ij| exceeds m_ij");
        if (!seen.emplace(std::min(i, j), std::max(i, j)).second)
            throw ParseError(line, "pair already listed");
        entries.push_back({i, j, a, m});
    }
    if (objects.labels.empty()) throw EmptyProblem();

    const std::size_t n = objects.labels.size();
    RankingProblem problem;
    problem.objects = objects.labels;
    problem.results = linalg::Matrix(n, n);
    problem.matches = linalg::Matrix(n, n);
    for (const Entry& e : entries) {
        problem.results(e.i, e.j) = e.a;
        problem.results(e.j, e.i) = -e.a;
        problem.matches(e.i, e.j) = e.m;
        problem.matches(e.j, e.i) = e.m;
    }
    return problem;
}

Digraph parse_digraph_csv(std::string_view text) {
    const auto lines = split_lines(text);
    require_header(lines, kDigraphHeader);

    LabelTable nodes;
    Digraph g;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t line = k + 1;
        if (trim(lines[k]).empty()) continue;
        const auto fields = split_fields(lines[k]);
        if (fields.size() != 2)
            throw ParseError(line, "expected 2 fields, got " + std::to_string(fields.size()));

        const std::size_t from = nodes.intern(fields[0], line, "node");
        const std::size_t to = nodes.intern(fields[1], line, "node");
        if (from == to)
            throw ParseError(line, "self-loop at '" + std::string(fields[0]) + "'");
        if (!seen.emplace(from, to).second)
            throw ParseError(line, "duplicate edge");
        g.edges.emplace_back(from, to);
    }
    if (nodes.labels.empty()) throw EmptyProblem();
    g.nodes = nodes.labels;
    return g;
}

std::string to_aggregated_csv(const RankingProblem& problem) {
    std::string out = "object_i,object_j,a_ij,m_ij\n";
    const std::size_t n = problem.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out += problem.objects[i];
            out += ',';
            out += problem.objects[j];
            out += ',';
            out += format_real(problem.results(i, j));
            out += ',';
            out += format_real(problem.matches(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string trace_to_csv(const IterationTrace& trace, const std::vector<std::string>& objects) {
    std::string out = "step";
    for (const std::string& label : objects) {
        out += ',';
        out += label;
    }
    out += ",delta\n";
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        out += std::to_string(k);
        for (double v : trace.iterates[k]) {
            out += ',';
            out += format_real(v);
        }
        out += ',';
        if (k > 0) out += format_real(trace.step_deltas[k - 1]);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json rating_document(const RatingVector& ratings, const Ranking& ranking) {
    nlohmann::ordered_json doc;
    doc["method"] = std::string(to_string(ratings.method));
    doc["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : ratings.parameters) doc["parameters"][key] = round_sig(value);
    doc["objects"] = ratings.objects;
    doc["ratings"] = json_values(ratings.values);
    doc["ranking"]["groups"] = ranking.groups;
    doc["ranking"]["order"] = ranking.to_string();
    doc["ranking"]["tie_tol"] = round_sig(ranking.tie_tolerance);
    return doc;
}

nlohmann::ordered_json iteration_document(const IterativeResult& result, const Ranking& ranking) {
    auto doc = rating_document(result.ratings, ranking);
    auto& block = doc["iteration"];
    block["steps"] = result.trace.iterates.empty() ? 0 : result.trace.iterates.size() - 1;
    block["converged_at"] = result.trace.converged_at
                                ? nlohmann::ordered_json(*result.trace.converged_at)
                                : nlohmann::ordered_json(nullptr);
    block["ranking_stable_at"] = result.trace.ranking_stable_at
                                     ? nlohmann::ordered_json(*result.trace.ranking_stable_at)
                                     : nlohmann::ordered_json(nullptr);
    block["final_delta"] = result.trace.step_deltas.empty()
                               ? nlohmann::ordered_json(nullptr)
                               : nlohmann::ordered_json(round_sig(result.trace.step_deltas.back()));
    return doc;
}

nlohmann::ordered_json diagnostics_document(const RankingProblem& problem,
                                            const GraphDiagnostics& diagnostics,
                                            const BalancedMultigraph& balanced) {
    nlohmann::ordered_json doc;
    doc["objects"] = problem.objects;
    doc["connected"] = diagnostics.connected();
    doc["components"] = json_labels(diagnostics.components, problem.objects);
    doc["degrees"] = json_values(diagnostics.degrees);
    doc["max_degree"] = round_sig(diagnostics.max_degree);
    doc["is_regular"] = diagnostics.is_regular;
    if (diagnostics.bipartition) {
        auto sides = nlohmann::ordered_json::array();
        for (const auto& side : *diagnostics.bipartition) {
            auto members = nlohmann::ordered_json::array();
            for (std::size_t i : side) members.push_back(problem.objects[i]);
            sides.push_back(std::move(members));
        }
        doc["bipartition"] = std::move(sides);
    } else {
        doc["bipartition"] = nullptr;
    }
    doc["is_regular_bipartite"] = diagnostics.is_regular_bipartite;
    doc["mu1_estimate"] = round_sig(diagnostics.mu1_estimate);
    doc["loops"] = json_values(balanced.loops);
    return doc;
}

std::string comparison_table(const std::vector<std::string>& objects,
                             const std::vector<RatingVector>& columns, double tie_tol) {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> cells(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        headers.emplace_back(to_string(columns[c].method));
        for (double v : columns[c].values) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", v);
            cells[c].emplace_back(buf);
        }
    }

    std::size_t label_width = std::string("object").size();
    for (const std::string& label : objects) label_width = std::max(label_width, label.size());
    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::size_t w = headers[c].size();
        for (const std::string& cell : cells[c]) w = std::max(w, cell.size());
        widths.push_back(w);
    }

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(label_width)) << "object";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << "  " << std::right << std::setw(static_cast<int>(widths[c])) << headers[c];
    out << '\n';
    for (std::size_t i = 0; i < objects.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(label_width)) << objects[i];
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << "  " << std::right << std::setw(static_cast<int>(widths[c])) << cells[c][i];
        out << '\n';
    }
    out << '\n';
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << "ranking (" << headers[c]
            << "): " << ranking_from_ratings(columns[c], tie_tol).to_string() << '\n';
    return out.str();
}

} // namespace rankit::io

#include "rankit/digraph.hpp"
#include "rankit/errors.hpp"
#include "rankit/graph.hpp"
#include "rankit/io.hpp"
#include "rankit/problem.hpp"
#include "rankit/solvers.hpp"

#include "CLI11.hpp"

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace rankit;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

io::InputFormat resolve_format(const std::string& requested, std::string_view text) {
    if (requested == "rounds") return io::InputFormat::Rounds;
    if (requested == "aggregated") return io::InputFormat::Aggregated;
    if (requested == "digraph") return io::InputFormat::Digraph;
    const auto detected = io::detect_format(text);
    if (!detected)
        throw std::invalid_argument(
            "input header matches no known dialect; pass --format rounds|aggregated|digraph");
    return *detected;
}

RankingProblem load_problem(std::string_view text, io::InputFormat format) {
    switch (format) {
        case io::InputFormat::Rounds: {
            const io::ParsedRounds parsed = io::parse_rounds_csv(text);
            return aggregate(parsed.rounds, parsed.objects);
        }
        case io::InputFormat::Aggregated:
            return io::parse_aggregated_csv(text);
        case io::InputFormat::Digraph:
            return digraph_to_ranking_problem(io::parse_digraph_csv(text));
    }
    throw std::logic_error("unhandled input format");
}

Digraph load_digraph(std::string_view text, io::InputFormat format) {
    if (format != io::InputFormat::Digraph)
        throw std::invalid_argument("this subcommand expects a digraph input (header `from,to`)");
    return io::parse_digraph_csv(text);
}

void print_document(const nlohmann::ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

// Per-subcommand state; every option from the surface lives here.
struct Options {
    std::string input = "-";
    std::string format = "auto";
    std::string method = "ls";
    std::optional<double> epsilon;
    std::optional<double> rounds;
    double tol = 1e-10;
    std::size_t max_iter = 100000;
    std::size_t pp_max_iter = 10000;
    std::string trace_file;
    double tie_tol = 1e-9;
    bool fallback_direct = false;
};

// Epsilon when none is given: 1/(mn), inside the reasonable range and
// scale-free (the opponent correction then weighs as much as the raw score).
double default_epsilon(const RankingProblem& problem, const std::optional<double>& rounds) {
    const double mn = grs_rounds(problem, rounds) * static_cast<double>(problem.size());
    return mn > 0.0 ? 1.0 / mn : 0.0;
}

int run_solve(const Options& opt) {
    const std::string text = read_input(opt.input);
    const RankingProblem problem = load_problem(text, resolve_format(opt.format, text));

    RatingVector ratings;
    if (opt.method == "score") {
        ratings = scores(problem);
    } else if (opt.method == "ls") {
        ratings = least_squares_direct(problem);
    } else { // grs
        const double eps = opt.epsilon ? *opt.epsilon : default_epsilon(problem, opt.rounds);
        ratings = generalized_row_sum(problem, eps, opt.rounds);
    }
    print_document(io::rating_document(ratings, ranking_from_ratings(ratings, opt.tie_tol)));
    return 0;
}

int run_iterate(const Options& opt) {
    const std::string text = read_input(opt.input);
    const RankingProblem problem = load_problem(text, resolve_format(opt.format, text));

    IterativeResult result;
    try {
        result = least_squares_iterative(problem, opt.tol, opt.max_iter);
    } catch (const RegularBipartiteGraph& e) {
        if (!opt.fallback_direct) throw;
        std::cerr << "note: " << e.what() << "; falling back to the direct solver\n";
        const RatingVector ratings = least_squares_direct(problem);
        print_document(io::rating_document(ratings, ranking_from_ratings(ratings, opt.tie_tol)));
        return 0;
    }

    if (!opt.trace_file.empty()) {
        std::ofstream out(opt.trace_file, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open trace file: " + opt.trace_file);
        out << io::trace_to_csv(result.trace, problem.objects);
    }
    print_document(
        io::iteration_document(result, ranking_from_ratings(result.ratings, opt.tie_tol)));
    if (!result.trace.converged_at) {
        std::cerr << "error: iteration did not converge within " << opt.max_iter
                  << " steps (partial trace above)\n";
        return 3;
    }
    return 0;
}

int run_diagnose(const Options& opt) {
    const std::string text = read_input(opt.input);
    const RankingProblem problem = load_problem(text, resolve_format(opt.format, text));
    print_document(
        io::diagnostics_document(problem, analyze(problem), balanced_multigraph(problem)));
    return 0;
}

int run_grs(const Options& opt) {
    const std::string text = read_input(opt.input);
    const RankingProblem problem = load_problem(text, resolve_format(opt.format, text));
    const double eps = opt.epsilon ? *opt.epsilon : default_epsilon(problem, opt.rounds);
    const RatingVector ratings = generalized_row_sum(problem, eps, opt.rounds);
    print_document(io::rating_document(ratings, ranking_from_ratings(ratings, opt.tie_tol)));
    return 0;
}

int run_positional_power(const Options& opt) {
    const std::string text = read_input(opt.input);
    const Digraph g = load_digraph(text, resolve_format(opt.format, text));
    const RatingVector ratings = positional_power(g, opt.tol, opt.pp_max_iter);
    print_document(io::rating_document(ratings, ranking_from_ratings(ratings, opt.tie_tol)));
    return 0;
}

int run_convert_digraph(const Options& opt) {
    const std::string text = read_input(opt.input);
    const Digraph g = load_digraph(text, resolve_format(opt.format, text));
    std::cout << io::to_aggregated_csv(digraph_to_ranking_problem(g));
    return 0;
}

int run_compare(const Options& opt) {
    const std::string text = read_input(opt.input);
    const io::InputFormat format = resolve_format(opt.format, text);
    const RankingProblem problem = load_problem(text, format);

    std::vector<RatingVector> columns;
    columns.push_back(scores(problem));
    const double eps = opt.epsilon ? *opt.epsilon : default_epsilon(problem, opt.rounds);
    columns.push_back(generalized_row_sum(problem, eps, opt.rounds));
    columns.push_back(least_squares_direct(problem));
    if (format == io::InputFormat::Digraph)
        columns.push_back(positional_power(io::parse_digraph_csv(text)));

    std::cout << io::comparison_table(problem.objects, columns, opt.tie_tol);
    return 0;
}

void add_input_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "Input CSV file, or - for standard input");
    cmd->add_option("--format", opt.format, "Input dialect (default: detect from the header)")
        ->check(CLI::IsMember({"auto", "rounds", "aggregated", "digraph"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rating and ranking of objects from paired comparisons"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* solve = app.add_subcommand("solve", "Rate with a one-shot method");
    add_input_options(solve, opt);
    solve->add_option("--method", opt.method, "score, ls (least squares) or grs")
        ->check(CLI::IsMember({"score", "ls", "grs"}));
    solve->add_option("--epsilon", opt.epsilon, "Generalized row sum coupling (default 1/(mn))");
    solve->add_option("--rounds", opt.rounds, "Round count m for grs (default: max match count)");
    solve->add_option("--tie-tol", opt.tie_tol, "Gap below which ratings tie (default 1e-9)");

    CLI::App* iterate = app.add_subcommand("iterate", "Least squares via score propagation");
    add_input_options(iterate, opt);
    iterate->add_option("--tol", opt.tol, "Stop when the step norm drops below this (default 1e-10)");
    iterate->add_option("--max-iter", opt.max_iter, "Step cap (default 100000)");
    iterate->add_option("--trace", opt.trace_file, "Write every iterate to this CSV file");
    iterate->add_flag("--fallback-direct", opt.fallback_direct,
                      "On a regular bipartite graph, use the direct solver instead of failing");
    iterate->add_option("--tie-tol", opt.tie_tol, "Gap below which ratings tie (default 1e-9)");

    CLI::App* diagnose = app.add_subcommand("diagnose", "Describe the comparison graph");
    add_input_options(diagnose, opt);

    CLI::App* grs = app.add_subcommand("grs", "Generalized row sum rating");
    add_input_options(grs, opt);
    grs->add_option("--epsilon", opt.epsilon, "Coupling parameter (default 1/(mn))");
    grs->add_option("--rounds", opt.rounds, "Round count m (default: max match count)");
    grs->add_option("--tie-tol", opt.tie_tol, "Gap below which ratings tie (default 1e-9)");

    CLI::App* pp = app.add_subcommand("positional-power", "Positional power of a digraph");
    add_input_options(pp, opt);
    pp->add_option("--tol", opt.tol, "Stop when the step norm drops below this (default 1e-10)");
    pp->add_option("--max-iter", opt.pp_max_iter, "Step cap (default 10000)");
    pp->add_option("--tie-tol", opt.tie_tol, "Gap below which ratings tie (default 1e-9)");

    CLI::App* convert = app.add_subcommand("convert-digraph",
                                           "Embed a digraph as an aggregated ranking problem");
    add_input_options(convert, opt);

    CLI::App* compare = app.add_subcommand("compare", "Rate with every method side by side");
    add_input_options(compare, opt);
    compare->add_option("--epsilon", opt.epsilon, "Generalized row sum coupling (default 1/(mn))");
    compare->add_option("--rounds", opt.rounds, "Round count m for grs (default: max match count)");
    compare->add_option("--tie-tol", opt.tie_tol, "Gap below which ratings tie (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are data errors
    }

    try {
        if (solve->parsed()) return run_solve(opt);
        if (iterate->parsed()) return run_iterate(opt);
        if (diagnose->parsed()) return run_diagnose(opt);
        if (grs->parsed()) return run_grs(opt);
        if (pp->parsed()) return run_positional_power(opt);
        if (convert->parsed()) return run_convert_digraph(opt);
        if (compare->parsed()) return run_compare(opt);
    } catch (const DisconnectedGraph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const RegularBipartiteGraph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const MaxIterationsExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const RankingError& e) { // parse errors, empty input, bad parameters
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

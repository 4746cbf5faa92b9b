#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include "dcrystal/burge.hpp"
#include "dcrystal/kr.hpp"
#include "dcrystal/serialize.hpp"
#include "dcrystal/trails.hpp"
#include "dcrystal/triangle.hpp"
#include "dcrystal/verify.hpp"

using namespace dcrystal;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" reads stdin, "@path" reads a file, anything else is literal JSON.
json read_input(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError("cannot open " + arg.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        text = arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
}

LusztigDatum read_datum(const std::string& arg, int n) {
    json j = read_input(arg);
    if (n > 0 && j.is_array()) j = {{"n", n}, {"rows", j}};
    try {
        auto c = datum_from_json(j);
        if (!fits_support(c.rank(), c.values(), Support::upper))
            throw UsageError("datum must be supported on the triangle");
        return c.as(Support::upper);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string partition_text(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
    os << ')';
    return os.str();
}

void print_tableau(const SkewTableau& t, bool as_text) {
    if (as_text)
        std::cout << (t.empty() ? std::string("(empty)\n") : to_text(t));
    else
        std::cout << tableau_to_json(t).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type D crystal combinatorics: Lusztig data, Burge insertion, KR crystals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    std::string input = "-", direction = "se", format = "json", graph_format = "dot", side = "lusztig", suite;
    bool inverse = false, trace = false, show_paths = false;
    VerifyConfig cfg;
    int rank = 0;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto* burge = app.add_subcommand("burge", "Burge correspondence between triangle data and tableaux");
    burge->add_option("input", input, "JSON datum / tableau, @file, or - for stdin");
    burge->add_option("--direction", direction, "se (anti-normal) or nw (normal)")
        ->check(CLI::IsMember({"se", "nw"}));
    burge->add_flag("--inverse", inverse, "map a tableau back to its datum");
    burge->add_flag("--trace", trace, "print the intermediate insertion tableaux");
    burge->add_option("--n", rank, "rank (required with --inverse or bare row lists)");
    burge->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* shape = app.add_subcommand("shape", "Shape of the tableau by insertion and by double paths");
    shape->add_option("input", input, "JSON datum, @file, or -");
    shape->add_option("--n", rank, "rank for bare row lists");
    shape->add_flag("--paths", show_paths, "include maximizing path tuples");
    shape->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* stats = app.add_subcommand("epsilon", "epsilon_n^* by double paths, trails and the string formula");
    stats->add_option("input", input, "JSON datum, @file, or -");
    stats->add_option("--n", rank, "rank for bare row lists");
    stats->add_option("--s", cfg.s, "also report membership in the level-s polytope");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite_help = "one of: all";
    for (const auto& s : suite_names()) suite_help += ", " + s;
    verify->add_option("suite,--suite", suite, suite_help);
    verify->add_option("--n", cfg.n, "rank")->check(CLI::Range(4, 12));
    verify->add_option("--s", cfg.s, "level")->check(CLI::NonNegativeNumber);
    verify->add_option("--bound", cfg.bound, "entries range over 0..bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--samples", cfg.samples, "random data instead of the exhaustive box")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* graph = app.add_subcommand("graph", "Affine crystal graph of the level-s KR crystal");
    graph->add_option("--n", cfg.n, "rank")->check(CLI::Range(4, 12));
    graph->add_option("--s", cfg.s, "level")->check(CLI::NonNegativeNumber);
    graph->add_option("--side", side, "lusztig or tableau")->check(CLI::IsMember({"lusztig", "tableau"}));
    graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    auto* roots = app.add_subcommand("roots", "The reduced word i_0 and its convex order");
    roots->add_option("--n", cfg.n, "rank")->check(CLI::Range(4, 40));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*burge) {
            const bool as_text = format == "text";
            if (inverse) {
                if (rank <= 0) throw UsageError("--inverse needs --n");
                SkewTableau t;
                try {
                    json j = read_input(input);
                    t = tableau_from_json(j.is_object() && j.contains("tableau") ? j.at("tableau") : j);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                LusztigDatum c = direction == "se" ? kappa_se_inverse(t, rank) : kappa_nw_inverse(t, rank);
                std::cout << (as_text ? json(datum_rows(c)).dump() : datum_to_json(c).dump(2)) << '\n';
                return kPass;
            }
            auto c = read_datum(input, rank);
            std::vector<SkewTableau> steps;
            auto t = direction == "se" ? kappa_se(c, trace ? &steps : nullptr) : kappa_nw(c, trace ? &steps : nullptr);
            if (as_text) {
                for (std::size_t k = 0; k < steps.size(); ++k) {
                    std::cout << "step " << k + 1 << ":\n";
                    print_tableau(steps[k], true);
                }
                print_tableau(t, true);
            } else {
                json out = {{"datum", datum_rows(c)},
                            {"biword", biword_to_json(datum_to_biword(
                                           c, direction == "se" ? BiwordOrder::omega : BiwordOrder::omega_prime))},
                            {"tableau", tableau_to_json(t)},
                            {"columns", t.column_count()}};
                if (trace) {
                    out["trace"] = json::array();
                    for (const auto& s : steps) out["trace"].push_back(tableau_to_json(s));
                }
                std::cout << out.dump(2) << '\n';
            }
            return kPass;
        }
        if (*shape) {
            auto c = read_datum(input, rank);
            auto by_insertion = lambda_of(c);
            auto by_paths = shape_from_paths(c);
            const bool agree = by_insertion == by_paths;
            if (format == "text") {
                std::cout << "insertion " << partition_text(by_insertion) << "\npaths     " << partition_text(by_paths)
                          << '\n'
                          << (agree ? "agree" : "MISMATCH") << '\n';
            } else {
                json out = {{"insertion", by_insertion}, {"paths", by_paths}, {"agree", agree}};
                if (show_paths) {
                    out["tuples"] = json::array();
                    for (int l = 1; 2 * l <= c.rank(); ++l) {
                        auto best = max_nonintersecting(c, l);
                        json tuple = json::array();
                        for (const auto& p : best.paths) tuple.push_back(double_path_to_json(p));
                        out["tuples"].push_back({{"l", l}, {"value", best.value}, {"paths", tuple}});
                    }
                }
                std::cout << out.dump(2) << '\n';
            }
            return agree ? kPass : kFail;
        }
        if (*stats) {
            auto c = read_datum(input, rank);
            const int by_paths = epsilon_star_n(c), by_trails = trail_max(c), by_strings = epsilon_star_n_bz(c);
            json out = {{"paths", by_paths}, {"trails", by_trails}, {"strings", by_strings}};
            if (stats->count("--s")) out["in_level"] = in_BJs(c, cfg.s);
            std::cout << out.dump(2) << '\n';
            return by_paths == by_trails && by_paths == by_strings ? kPass : kFail;
        }
        if (*verify) {
            if (suite.empty()) throw UsageError("verify needs a suite name");
            std::vector<std::string> todo = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            json reports = json::array();
            for (const auto& name : todo) {
                SuiteReport r;
                try {
                    r = run_suite(name, cfg);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                ok = ok && r.passed();
                if (format == "text") {
                    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " cases=" << r.cases
                              << " failures=" << r.failures << '\n';
                    for (const auto& ex : r.counterexamples) std::cout << "  " << ex << '\n';
                    if (!r.details.empty()) std::cout << "  " << r.details.dump() << '\n';
                } else {
                    reports.push_back(report_json(r));
                }
            }
            if (format != "text") std::cout << (todo.size() == 1 ? reports[0] : reports).dump(2) << '\n';
            return ok ? kPass : kFail;
        }
        if (*graph) {
            auto g = crystal_graph(cfg.n, cfg.s, side == "lusztig" ? GraphSide::lusztig : GraphSide::tableau);
            std::cout << (graph_format == "json" ? graph_json(g) + "\n" : to_dot(g));
            return kPass;
        }
        if (*roots) {
            const auto& rs = root_system(cfg.n);
            std::cout << json{{"n", cfg.n}, {"word", rs.word()}, {"roots", roots_to_json(rs.roots())}}.dump(2) << '\n';
            return kPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}

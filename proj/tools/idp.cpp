// Command-line front end: solve instances, classify forbidden patterns,
// compile reduction corpora, certify them, and run the oracle-equivalence
// suites. Exit codes for `solve`: 0 = YES, 1 = NO, 2 = budget exhausted,
// 3 = bad input. Other commands: 0 = pass, 1 = failed checks, 3 = bad input.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "idp/idp.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_outcome(const idp::SolveOutcome& out) {
    std::cout << idp::status_name(out.status) << "\n";
    if (out.solution) {
        for (size_t i = 0; i < out.solution->paths.size(); ++i) {
            std::cout << "path " << i << ":";
            for (idp::Vertex v : out.solution->paths[i]) std::cout << ' ' << v;
            std::cout << "\n";
        }
    }
    if (!out.route.empty()) std::cout << "route: " << out.route << "\n";
    std::cout << "nodes: " << out.stats.nodes << "\n";
}

int exit_code(idp::SolveStatus s) {
    switch (s) {
    case idp::SolveStatus::Yes: return 0;
    case idp::SolveStatus::No: return 1;
    case idp::SolveStatus::BudgetExhausted: return 2;
    }
    return 3;
}

struct CommonOpts {
    std::int64_t budget_nodes = 50'000'000;
    double budget_seconds = 60.0;
    std::uint64_t seed = 1;
    std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--budget-nodes", o.budget_nodes, "search node limit");
    cmd->add_option("--budget-seconds", o.budget_seconds, "wall clock limit per oracle call");
    cmd->add_option("--seed", o.seed, "seed for randomized suites");
    cmd->add_option("--out", o.out_dir, "output directory");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced disjoint paths workbench"};
    app.require_subcommand(1);

    CommonOpts opts;

    // solve
    auto* solve = app.add_subcommand("solve", "decide one instance");
    std::string solve_file, solve_mode = "exact", solve_pattern;
    solve->add_option("instance", solve_file, "instance file (text format)")->required();
    solve->add_option("--mode", solve_mode, "exact | dispatch")
        ->check(CLI::IsMember({"exact", "dispatch"}));
    solve->add_option("--pattern", solve_pattern, "forbidden pattern for dispatch routing");
    add_common(solve, opts);

    // classify
    auto* classify = app.add_subcommand("classify", "dichotomy verdict for a pattern");
    std::string cls_pattern, cls_regime = "fixed-k";
    classify->add_option("pattern", cls_pattern, "pattern string, e.g. P3+chair")->required();
    classify->add_option("--regime", cls_regime, "fixed-k | variable-k")
        ->check(CLI::IsMember({"fixed-k", "variable-k"}));

    // reduce
    auto* reduce = app.add_subcommand("reduce", "compile a source instance into a corpus item");
    std::string red_source, red_input, red_name;
    int red_l = 1, red_sub = 0, red_k = 2, red_x = -1, red_y = -1;
    reduce->add_option("--source", red_source, "sat | is | cycle")
        ->required()
        ->check(CLI::IsMember({"sat", "is", "cycle"}));
    reduce->add_option("--input", red_input, "source file (DIMACS cnf or graph text)")->required();
    reduce->add_option("--name", red_name, "item name (default: input stem)");
    reduce->add_option("--l", red_l, "path-length parameter for sat");
    reduce->add_option("--subdivisions", red_sub, "subdivision count for cycle");
    reduce->add_option("--k", red_k, "target set size for is");
    reduce->add_option("--x", red_x, "first prescribed vertex for cycle");
    reduce->add_option("--y", red_y, "second prescribed vertex for cycle");
    add_common(reduce, opts);

    // certify
    auto* certify = app.add_subcommand("certify", "run certification properties over a corpus");
    std::string cert_dir, cert_props = "c6-free";
    certify->add_option("--corpus", cert_dir, "corpus directory with manifest.json")->required();
    certify->add_option("--properties", cert_props,
                        "comma list: c6-free,h-ell-free,degree-bound,induced-path-bound,roundtrip");
    add_common(certify, opts);

    // roundtrip
    auto* roundtrip = app.add_subcommand("roundtrip", "oracle-equivalence suites");
    std::string rt_suite;
    int rt_count = 50;
    roundtrip->add_option("--suite", rt_suite, "sat | is | hole | peel | chairfree")
        ->required()
        ->check(CLI::IsMember({"sat", "is", "hole", "peel", "chairfree"}));
    roundtrip->add_option("--count", rt_count, "number of cases (where applicable)");
    add_common(roundtrip, opts);

    CLI11_PARSE(app, argc, argv);

    idp::SolveBudget budget{opts.budget_nodes, opts.budget_seconds};

    try {
        if (*solve) {
            idp::IdpInstance inst = idp::parse_instance_text(read_file(solve_file));
            idp::SolveOutcome out;
            if (solve_mode == "dispatch") {
                if (solve_pattern.empty())
                    throw std::invalid_argument("dispatch mode needs --pattern");
                out = idp::solve_dispatch(inst, idp::parse_pattern(solve_pattern), budget);
            } else {
                out = idp::solve_exact(inst, budget);
            }
            if (out.solution && !idp::check_solution(inst, *out.solution, false))
                throw std::logic_error("witness failed re-check");
            print_outcome(out);
            return exit_code(out.status);
        }

        if (*classify) {
            idp::Pattern p = idp::parse_pattern(cls_pattern);
            idp::Classification c = cls_regime == "fixed-k"
                                        ? idp::classify_fixed_k(idp::realize(p))
                                        : idp::classify_variable_k(idp::realize(p));
            std::cout << idp::verdict_name(c.verdict) << " " << c.reason << "\n";
            return 0;
        }

        if (*reduce) {
            if (opts.out_dir.empty()) throw std::invalid_argument("reduce needs --out");
            std::string name = red_name.empty() ? fs::path(red_input).stem().string() : red_name;
            idp::ReductionArtifact art;
            if (red_source == "sat") {
                idp::CnfFormula phi = idp::parse_dimacs(read_file(red_input));
                art = idp::sat_to_idp(phi, red_l);
                idp::populate_expected_sat(art, phi, red_l);
            } else if (red_source == "is") {
                idp::Graph g = idp::parse_graph_text(read_file(red_input));
                art = idp::is_to_idp(g, red_k);
                idp::populate_expected_is(art, g, red_k);
            } else {
                idp::Graph g = idp::parse_graph_text(read_file(red_input));
                if (red_x < 0 || red_y < 0)
                    throw std::invalid_argument("cycle reduction needs --x and --y");
                art = idp::cycle_to_idp(g, red_x, red_y, red_sub);
                idp::populate_expected_cycle(art, g, red_x, red_y, budget);
            }
            nlohmann::json run_config;
            run_config["command"] = "reduce";
            run_config["source"] = red_source;
            run_config["seed"] = opts.seed;
            run_config["params"] = {{"l", red_l}, {"subdivisions", red_sub}, {"k", red_k},
                                    {"x", red_x}, {"y", red_y}};
            idp::write_corpus(opts.out_dir, {{name, art}}, run_config);
            std::cout << "wrote " << name << " (n=" << art.instance.graph.vertex_count()
                      << ", expected="
                      << (art.meta.expected_answer
                              ? (*art.meta.expected_answer ? "YES" : "NO")
                              : "unknown")
                      << ") to " << opts.out_dir << "\n";
            return 0;
        }

        if (*certify) {
            std::vector<std::string> props;
            std::istringstream ss(cert_props);
            std::string prop;
            while (std::getline(ss, prop, ','))
                if (!prop.empty()) props.push_back(prop);
            auto rows = idp::certify_corpus(cert_dir, props, budget);
            bool all_pass = true;
            for (const auto& row : rows) {
                std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.item << "  " << row.property;
                if (!row.detail.empty()) std::cout << "  (" << row.detail << ")";
                std::cout << "\n";
                all_pass = all_pass && row.pass;
            }
            std::cout << (all_pass ? "certification passed" : "certification FAILED") << "\n";
            return all_pass ? 0 : 1;
        }

        if (*roundtrip) {
            idp::SuiteReport rep;
            if (rt_suite == "peel")
                rep = idp::suite_peel(opts.seed, rt_count, budget);
            else if (rt_suite == "chairfree")
                rep = idp::suite_chairfree(opts.seed, rt_count, budget);
            else if (rt_suite == "hole")
                rep = idp::suite_hole(opts.seed, rt_count, budget);
            else if (rt_suite == "sat")
                rep = idp::suite_sat(4, 2, {1, 2}, budget);
            else
                rep = idp::suite_is(opts.seed, rt_count, budget);
            std::cout << rt_suite << ": " << rep.agree << "/" << rep.total << " agree";
            if (rep.budget_exhausted) std::cout << ", " << rep.budget_exhausted << " budget-exhausted";
            std::cout << "\n";
            if (!rep.ok()) {
                std::string dir = opts.out_dir.empty() ? "." : opts.out_dir;
                fs::create_directories(dir);
                for (size_t i = 0; i < rep.failures.size(); ++i) {
                    auto path = fs::path(dir) / (rt_suite + "-failure-" + std::to_string(i) + ".txt");
                    std::ofstream out(path);
                    out << rep.failures[i] << "\n";
                    std::cout << "failure written: " << path.string() << "\n";
                }
                return 1;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

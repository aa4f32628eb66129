// Command-line front end: loads a workspace, runs one verification command,
// prints the deterministic JSON report to stdout (or --out), real elapsed
// time to stderr only.  Exit codes: 0 verified, 1 property failure, 2 bad
// input / budget exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "exactcat/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exactcat: exact structures on quiver representations over prime fields"};
    app.require_subcommand(1);

    std::string workspace_path;
    std::string structure_name = "all";
    std::string object_name;
    std::string out_path;
    std::uint64_t seed = 0;
    exactcat::BudgetOverrides overrides;
    int max_total_dim = 0;
    double enumeration = 0;
    std::int64_t iso_search = 0;

    app.add_option("-w,--workspace", workspace_path, "workspace JSON file")->required();
    app.add_option("-s,--structure", structure_name,
                   "structure to analyze: all, split, or a workspace rule name")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for the randomized sweeps")->capture_default_str();
    app.add_option("-o,--out", out_path, "write the report here instead of stdout");
    app.add_option("--max-total-dim", max_total_dim, "override budgets.max_total_dim")
        ->each([&](const std::string&) { overrides.max_total_dim = max_total_dim; });
    app.add_option("--enumeration-budget", enumeration, "override budgets.enumeration")
        ->each([&](const std::string&) { overrides.enumeration = enumeration; });
    app.add_option("--iso-budget", iso_search, "override budgets.iso_search")
        ->each([&](const std::string&) { overrides.iso_search = iso_search; });

    CLI::App* c_axioms = app.add_subcommand(
        "check-axioms", "exact-structure axioms + redundant axiom over the corpus");
    CLI::App* c_classify =
        app.add_subcommand("classify", "axioms plus the AI / AS / AIS classification");
    CLI::App* c_simples =
        app.add_subcommand("simples", "E-simple objects, Schur sweep, automorphism groups");
    CLI::App* c_series =
        app.add_subcommand("series", "composition series (greedy and exhaustive)");
    c_series->add_option("--object", object_name,
                         "restrict to this workspace object (default: whole corpus)");
    CLI::App* c_jh = app.add_subcommand(
        "jh", "Jordan-Hoelder property and the intersect-and-sum series comparison");
    CLI::App* c_iso = app.add_subcommand(
        "iso-theorems", "second/third isomorphism sequences and the 3x3 bottom row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        exactcat::Workspace ws = exactcat::load_workspace(workspace_path, overrides);

        exactcat::CommandResult res;
        if (c_axioms->parsed())
            res = exactcat::cmd_check_axioms(ws, structure_name, seed);
        else if (c_classify->parsed())
            res = exactcat::cmd_classify(ws, structure_name, seed);
        else if (c_simples->parsed())
            res = exactcat::cmd_simples(ws, structure_name, seed);
        else if (c_series->parsed())
            res = exactcat::cmd_series(ws, structure_name, object_name, seed);
        else if (c_jh->parsed())
            res = exactcat::cmd_jh(ws, structure_name, seed);
        else if (c_iso->parsed())
            res = exactcat::cmd_iso_theorems(ws, structure_name, seed);

        std::string text = res.report.dump(2);
        text += '\n';
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw exactcat::workspace_error("cannot write report to: " + out_path);
            out << text;
        }

        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0);
        std::cerr << "elapsed_ms=" << elapsed.count() << std::endl;
        return res.exit_code;
    } catch (const exactcat::error& err) {
        std::cerr << "error: " << err.what() << std::endl;
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "unexpected error: " << err.what() << std::endl;
        return 2;
    }
}

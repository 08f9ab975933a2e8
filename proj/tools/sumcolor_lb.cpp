#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sumcolor/dimacs.hpp"
#include "sumcolor/harness.hpp"
#include "sumcolor/oracle.hpp"

using namespace sumcolor;

namespace {

void add_common_options(CLI::App* cmd, std::string& instance, SearchConfig& cfg,
                        std::string& format) {
    cmd->add_option("--instance", instance, "DIMACS .col instance file")->required();
    cmd->add_option("--runs", cfg.runs, "independent runs per instance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.base_seed, "base seed; run i uses seed + i");
    cmd->add_option("--mmax", cfg.m_max, "clique pool capacity per extraction round")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pmax", cfg.p_max, "consecutive unproductive tries before the pool closes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", cfg.time_limit_per_run,
                    "per-run wall-clock limit in seconds (0 = unlimited)");
    cmd->add_option("--mc-iters", cfg.max_clique_budget.max_iterations,
                    "tabu iteration budget for each max-clique search");
    cmd->add_option("--pack-iters", cfg.packing_budget.max_iterations,
                    "tabu iteration budget for each set-packing search");
    cmd->add_option("--format", format, "report format: csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower bounds for minimum sum coloring via clique decomposition"};
    app.require_subcommand(1);

    std::string instance, format = "csv", method = "exclique", cert_path, what = "max-clique";
    std::string known_path;
    SearchConfig cfg;

    CLI::App* run = app.add_subcommand("run", "run one extraction method on an instance");
    add_common_options(run, instance, cfg, format);
    run->add_option("--method", method, "exclique, oboclique, exact-lb or exact-sum");
    run->add_option("--cert", cert_path, "write the best run's decomposition certificate here");
    run->add_option("--known-bounds", known_path,
                    "CSV of literature bounds; prints a gap summary on stderr");

    CLI::App* compare = app.add_subcommand("compare", "run exclique and oboclique with shared seeds");
    add_common_options(compare, instance, cfg, format);
    compare->add_option("--known-bounds", known_path,
                        "CSV of literature bounds; prints a gap summary on stderr");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact solvers for tiny graphs (debugging)");
    oracle_cmd->add_option("--instance", instance, "DIMACS .col instance file")->required();
    oracle_cmd->add_option("--what", what, "max-clique, lb-star or chromatic-sum")
        ->check(CLI::IsMember({"max-clique", "lb-star", "chromatic-sum"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const auto m = method_from_name(method);
            if (!m) {
                std::cerr << "error: unknown method '" << method << "'\n";
                return 2;
            }
            cfg.method = *m;
            const RunReport report = run_experiment_file(instance, cfg);
            std::cout << emit_report({report},
                                     format == "csv" ? ReportFormat::csv : ReportFormat::markdown);
            if (!cert_path.empty()) {
                if (report.best_certificate.empty()) {
                    std::cerr << "error: method '" << method << "' produces no certificate\n";
                    return 2;
                }
                std::ofstream out(cert_path);
                if (!out) {
                    std::cerr << "error: cannot write '" << cert_path << "'\n";
                    return 2;
                }
                out << report.best_certificate;
            }
            if (!known_path.empty())
                std::cerr << gap_summary(report, load_known_bounds(known_path));
        } else if (compare->parsed()) {
            const CompareReport cmp = compare_methods_file(instance, cfg);
            std::cout << emit_compare(cmp);
            if (!known_path.empty())
                std::cerr << gap_summary(cmp.exclique, load_known_bounds(known_path));
        } else if (oracle_cmd->parsed()) {
            const Graph g = parse_dimacs_file(instance);
            if (what == "max-clique") {
                const Clique c = oracle::exact_max_clique(g);
                std::cout << "omega " << c.size() << "\n";
                for (std::size_t i = 0; i < c.members().size(); ++i)
                    std::cout << (i ? " " : "") << g.label(c.members()[i]);
                std::cout << "\n";
            } else if (what == "lb-star") {
                std::cout << "lb-star " << oracle::exact_lb_star(g) << "\n";
            } else {
                std::cout << "chromatic-sum " << oracle::exact_chromatic_sum(g) << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

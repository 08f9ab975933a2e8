#ifndef SUMCOLOR_HARNESS_HPP
#define SUMCOLOR_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumcolor/decompose.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

enum class Method { exclique, oboclique, exact_lb, exact_sum };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct SearchConfig {
    Method method = Method::exclique;
    int m_max = 2000;
    int p_max = 100;
    TabuParams tabu;
    SearchBudget max_clique_budget{200000, 0};
    SearchBudget packing_budget{200000, 0};
    int runs = 20;
    std::uint64_t base_seed = 1;
    double time_limit_per_run = 0; // seconds, 0 = unlimited

    DecomposeOptions decompose_options() const;
};

struct RunRecord {
    std::uint64_t seed = 0;
    long long lb = 0;
    double seconds = 0;
    SizeHistogram histogram;
};

struct RunReport {
    std::string instance_name;
    int vertex_count = 0;
    long long edge_count = 0;
    double density = 0;
    Method method = Method::exclique;
    long long best_lb = 0;
    double mean_lb = 0;
    double std_lb = 0; // population standard deviation
    double mean_time_seconds = 0;
    std::vector<RunRecord> per_run;
    std::string best_certificate; // certificate text of the best run
};

// cfg.runs independent runs seeded base_seed + i; every decomposition is
// validated before its bound is recorded.  Runs exceeding the per-run
// time limit are discarded with a warning on stderr.
RunReport run_experiment(const Graph& g, const std::string& name, const SearchConfig& cfg);
RunReport run_experiment_file(const std::string& path, const SearchConfig& cfg);

enum class ReportFormat { csv, markdown };

std::string emit_report(const std::vector<RunReport>& reports, ReportFormat format);

struct CompareReport {
    RunReport exclique;
    RunReport oboclique;
};

// Both methods under identical seeds and budgets.
CompareReport compare_methods(const Graph& g, const std::string& name, const SearchConfig& cfg);
CompareReport compare_methods_file(const std::string& path, const SearchConfig& cfg);

// Side-by-side statistics plus the best run's size histogram per method.
std::string emit_compare(const CompareReport& cmp);

// Literature constants shipped in data/known_bounds.csv; never computed.
struct KnownBounds {
    std::optional<long long> ub;
    std::optional<long long> lb;
};

std::map<std::string, KnownBounds> load_known_bounds(const std::string& path);

// One-line gap summary against the literature, or empty when the
// instance has no entry.
std::string gap_summary(const RunReport& report, const std::map<std::string, KnownBounds>& known);

} // namespace sumcolor

#endif

#include "sumcolor/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sumcolor/dimacs.hpp"
#include "sumcolor/oracle.hpp"

namespace sumcolor {

namespace {

std::string fixed2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
    case Method::exclique: return "exclique";
    case Method::oboclique: return "oboclique";
    case Method::exact_lb: return "exact-lb";
    case Method::exact_sum: return "exact-sum";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "exclique") return Method::exclique;
    if (name == "oboclique") return Method::oboclique;
    if (name == "exact-lb") return Method::exact_lb;
    if (name == "exact-sum") return Method::exact_sum;
    return std::nullopt;
}

DecomposeOptions SearchConfig::decompose_options() const {
    DecomposeOptions opt;
    opt.m_max = m_max;
    opt.p_max = p_max;
    opt.tabu = tabu;
    opt.max_clique_budget = max_clique_budget;
    opt.packing_budget = packing_budget;
    opt.time_limit = time_limit_per_run;
    return opt;
}

RunReport run_experiment(const Graph& g, const std::string& name, const SearchConfig& cfg) {
    if (cfg.runs < 1) throw std::invalid_argument("runs must be >= 1");

    RunReport report;
    report.instance_name = name;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.density = g.density();
    report.method = cfg.method;

    if (cfg.method == Method::exact_lb || cfg.method == Method::exact_sum) {
        // Deterministic oracles: one run regardless of cfg.runs.
        const auto t0 = std::chrono::steady_clock::now();
        const long long value = cfg.method == Method::exact_lb ? oracle::exact_lb_star(g)
                                                               : oracle::exact_chromatic_sum(g);
        const std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;
        report.per_run.push_back({cfg.base_seed, value, el.count(), {}});
    } else {
        const DecomposeOptions opt = cfg.decompose_options();
        long long best = -1;
        for (int i = 0; i < cfg.runs; ++i) {
            const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(i);
            const auto t0 = std::chrono::steady_clock::now();
            CliqueDecomposition d;
            try {
                d = cfg.method == Method::exclique ? exclique(g, opt, seed) : oboclique(g, opt, seed);
            } catch (const TimeLimitError&) {
                std::cerr << "warning: " << name << " run " << i
                          << " exceeded the time limit and was discarded\n";
                continue;
            }
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;

            const ValidationResult check = validate(d, g);
            if (!check.ok())
                throw std::logic_error("run " + std::to_string(i) + " produced an invalid decomposition: " +
                                       check.violations.front());

            report.per_run.push_back({seed, d.bound, el.count(), size_histogram(d)});
            if (d.bound > best) {
                best = d.bound;
                report.best_certificate = write_certificate(d, g);
            }
        }
    }

    if (report.per_run.empty())
        throw std::runtime_error("all runs of '" + name + "' were discarded");

    double sum = 0, sum_t = 0;
    report.best_lb = report.per_run.front().lb;
    for (const RunRecord& r : report.per_run) {
        report.best_lb = std::max(report.best_lb, r.lb);
        sum += static_cast<double>(r.lb);
        sum_t += r.seconds;
    }
    const double n = static_cast<double>(report.per_run.size());
    report.mean_lb = sum / n;
    double var = 0;
    for (const RunRecord& r : report.per_run) {
        const double d = static_cast<double>(r.lb) - report.mean_lb;
        var += d * d;
    }
    report.std_lb = std::sqrt(var / n);
    report.mean_time_seconds = sum_t / n;
    return report;
}

RunReport run_experiment_file(const std::string& path, const SearchConfig& cfg) {
    const Graph g = parse_dimacs_file(path);
    return run_experiment(g, std::filesystem::path(path).stem().string(), cfg);
}

std::string emit_report(const std::vector<RunReport>& reports, ReportFormat format) {
    if (reports.empty()) throw std::invalid_argument("no reports to emit");
    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << "instance,V,E,density,method,best_lb,mean_lb,std_lb,mean_time_s\n";
        for (const RunReport& r : reports)
            out << r.instance_name << ',' << r.vertex_count << ',' << r.edge_count << ','
                << fixed2(r.density) << ',' << method_name(r.method) << ',' << r.best_lb << ','
                << fixed2(r.mean_lb) << ',' << fixed2(r.std_lb) << ','
                << fixed2(r.mean_time_seconds) << '\n';
    } else {
        out << "| Instance | V | E | Den | Method | LB | Avg.(Std.) | T[second] |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (const RunReport& r : reports)
            out << "| " << r.instance_name << " | " << r.vertex_count << " | " << r.edge_count
                << " | " << fixed2(r.density) << " | " << method_name(r.method) << " | " << r.best_lb
                << " | " << fixed2(r.mean_lb) << '(' << fixed2(r.std_lb) << ')' << " | "
                << fixed2(r.mean_time_seconds) << " |\n";
    }
    return out.str();
}

CompareReport compare_methods(const Graph& g, const std::string& name, const SearchConfig& cfg) {
    SearchConfig ex = cfg;
    ex.method = Method::exclique;
    SearchConfig obo = cfg;
    obo.method = Method::oboclique;
    return CompareReport{run_experiment(g, name, ex), run_experiment(g, name, obo)};
}

CompareReport compare_methods_file(const std::string& path, const SearchConfig& cfg) {
    const Graph g = parse_dimacs_file(path);
    return compare_methods(g, std::filesystem::path(path).stem().string(), cfg);
}

std::string emit_compare(const CompareReport& cmp) {
    std::ostringstream out;
    out << emit_report({cmp.exclique, cmp.oboclique}, ReportFormat::markdown);

    // Best run's size distribution per method.
    auto best_histogram = [](const RunReport& r) -> SizeHistogram {
        const RunRecord* best = nullptr;
        for (const RunRecord& rec : r.per_run)
            if (!best || rec.lb > best->lb) best = &rec;
        return best ? best->histogram : SizeHistogram{};
    };
    const SizeHistogram hex = best_histogram(cmp.exclique);
    const SizeHistogram hob = best_histogram(cmp.oboclique);

    int max_size = 0;
    for (const auto& [s, _] : hex) max_size = std::max(max_size, s);
    for (const auto& [s, _] : hob) max_size = std::max(max_size, s);

    out << "\n| |C| | " << method_name(cmp.exclique.method) << " | "
        << method_name(cmp.oboclique.method) << " |\n|---|---|---|\n";
    for (int s = max_size; s >= 1; --s) {
        const auto a = hex.find(s);
        const auto b = hob.find(s);
        if (a == hex.end() && b == hob.end()) continue;
        out << "| " << s << " | " << (a == hex.end() ? 0 : a->second) << " | "
            << (b == hob.end() ? 0 : b->second) << " |\n";
    }
    return out.str();
}

std::map<std::string, KnownBounds> load_known_bounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::map<std::string, KnownBounds> out;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { // instance,ub_literature,lb_literature
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string name, ub, lb;
        if (!std::getline(ls, name, ',') || !std::getline(ls, ub, ',') || !std::getline(ls, lb))
            throw std::runtime_error("malformed known-bounds row: " + line);
        KnownBounds kb;
        if (ub != "-") kb.ub = std::stoll(ub);
        if (lb != "-") kb.lb = std::stoll(lb);
        out[name] = kb;
    }
    return out;
}

std::string gap_summary(const RunReport& report, const std::map<std::string, KnownBounds>& known) {
    const auto it = known.find(report.instance_name);
    if (it == known.end()) return {};
    std::ostringstream out;
    out << report.instance_name << ": best computed LB " << report.best_lb;
    if (it->second.lb)
        out << ", literature LB* " << *it->second.lb << " (delta " << report.best_lb - *it->second.lb
            << ')';
    if (it->second.ub)
        out << ", literature UB* " << *it->second.ub << " (gap " << *it->second.ub - report.best_lb
            << ')';
    out << '\n';
    return out.str();
}

} // namespace sumcolor

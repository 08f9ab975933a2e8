#include "sumcolor/decompose.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sumcolor {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t round, std::uint64_t phase) {
    std::uint64_t z = seed ^ (round * 0x9e3779b97f4a7c15ULL) ^ (phase * 0xc2b2ae3d27d4eb4fULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Deadline {
public:
    explicit Deadline(double limit_seconds) : limit_(limit_seconds) {}

    void check() const {
        if (limit_ <= 0) return;
        const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
        if (el.count() > limit_) throw TimeLimitError("decomposition exceeded its time limit");
    }

private:
    double limit_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Clique translate(const Graph& original, const Clique& c, const std::vector<int>& orig_of) {
    VertexSet members;
    members.reserve(c.members().size());
    for (int v : c.members()) members.push_back(orig_of[v]);
    return Clique(original, std::move(members));
}

} // namespace

long long decomposition_bound(const std::vector<int>& sizes) {
    long long total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("clique sizes must be positive");
        total += static_cast<long long>(s) * (s + 1) / 2;
    }
    return total;
}

CliqueDecomposition exclique(const Graph& g, const DecomposeOptions& opt, std::uint64_t seed) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");

    CliqueDecomposition result;
    Graph residual = g;
    std::vector<int> orig_of(g.vertex_count());
    std::iota(orig_of.begin(), orig_of.end(), 0);

    const Deadline deadline(opt.time_limit);
    for (std::uint64_t round = 0; residual.vertex_count() > 0; ++round) {
        deadline.check();
        const Clique largest =
            find_max_clique(residual, opt.tabu, opt.max_clique_budget, mix(seed, round, 1));
        const std::vector<Clique> pool =
            collect_cliques_of_size(residual, largest.size(), opt.m_max, opt.p_max, opt.tabu,
                                    mix(seed, round, 2), &largest);
        const std::vector<Clique> selected =
            select_max_disjoint(residual, pool, opt.tabu, mix(seed, round, 3), opt.packing_budget);

        VertexSet removed;
        for (const Clique& c : selected) {
            result.cliques.push_back(translate(g, c, orig_of));
            removed.insert(removed.end(), c.members().begin(), c.members().end());
        }
        std::sort(removed.begin(), removed.end());
        residual = remove_vertices(residual, removed);

        std::vector<int> next(residual.vertex_count());
        std::vector<char> gone(orig_of.size(), 0);
        for (int v : removed) gone[v] = 1;
        int i = 0;
        for (std::size_t v = 0; v < orig_of.size(); ++v)
            if (!gone[v]) next[i++] = orig_of[v];
        orig_of = std::move(next);
    }

    std::vector<int> sizes;
    for (const Clique& c : result.cliques) sizes.push_back(c.size());
    result.bound = decomposition_bound(sizes);
    return result;
}

CliqueDecomposition oboclique(const Graph& g, const DecomposeOptions& opt, std::uint64_t seed) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");

    CliqueDecomposition result;
    Graph residual = g;
    std::vector<int> orig_of(g.vertex_count());
    std::iota(orig_of.begin(), orig_of.end(), 0);

    const Deadline deadline(opt.time_limit);
    for (std::uint64_t round = 0; residual.vertex_count() > 0; ++round) {
        deadline.check();
        const Clique largest =
            find_max_clique(residual, opt.tabu, opt.max_clique_budget, mix(seed, round, 1));
        result.cliques.push_back(translate(g, largest, orig_of));

        residual = remove_vertices(residual, largest.members());
        std::vector<int> next(residual.vertex_count());
        std::vector<char> gone(orig_of.size(), 0);
        for (int v : largest.members()) gone[v] = 1;
        int i = 0;
        for (std::size_t v = 0; v < orig_of.size(); ++v)
            if (!gone[v]) next[i++] = orig_of[v];
        orig_of = std::move(next);
    }

    std::vector<int> sizes;
    for (const Clique& c : result.cliques) sizes.push_back(c.size());
    result.bound = decomposition_bound(sizes);
    return result;
}

ValidationResult validate(const CliqueDecomposition& d, const Graph& g) {
    ValidationResult res;
    const int n = g.vertex_count();
    std::vector<int> covered(n, 0);

    for (std::size_t i = 0; i < d.cliques.size(); ++i) {
        const VertexSet& m = d.cliques[i].members();
        for (int v : m) {
            if (v < 0 || v >= n) {
                res.violations.push_back("clique " + std::to_string(i) + ": vertex out of range");
                continue;
            }
            ++covered[v];
        }
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if (m[a] >= 0 && m[a] < n && m[b] >= 0 && m[b] < n && !g.adjacent(m[a], m[b]))
                    res.violations.push_back("clique " + std::to_string(i) + ": vertices " +
                                             std::to_string(m[a]) + " and " + std::to_string(m[b]) +
                                             " are not adjacent");
    }
    for (int v = 0; v < n; ++v) {
        if (covered[v] == 0)
            res.violations.push_back("coverage: vertex " + std::to_string(v) + " is uncovered");
        else if (covered[v] > 1)
            res.violations.push_back("disjointness: vertex " + std::to_string(v) + " appears " +
                                     std::to_string(covered[v]) + " times");
    }

    std::vector<int> sizes;
    for (const Clique& c : d.cliques) sizes.push_back(c.size());
    if (d.bound != decomposition_bound(sizes))
        res.violations.push_back("bound: stored " + std::to_string(d.bound) + " != computed " +
                                 std::to_string(decomposition_bound(sizes)));
    return res;
}

SizeHistogram size_histogram(const CliqueDecomposition& d) {
    SizeHistogram h;
    for (const Clique& c : d.cliques) ++h[c.size()];
    return h;
}

std::string write_certificate(const CliqueDecomposition& d, const Graph& g) {
    std::vector<std::vector<int>> lines;
    for (const Clique& c : d.cliques) {
        std::vector<int> ids;
        for (int v : c.members()) ids.push_back(g.label(v));
        std::sort(ids.begin(), ids.end());
        lines.push_back(std::move(ids));
    }
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });

    std::ostringstream out;
    out << "lb " << d.bound << '\n';
    for (const auto& line : lines) {
        for (std::size_t i = 0; i < line.size(); ++i) out << (i ? " " : "") << line[i];
        out << '\n';
    }
    return out.str();
}

CliqueDecomposition read_certificate(const std::string& text, const Graph& g) {
    std::map<int, int> vertex_of_label;
    for (int v = 0; v < g.vertex_count(); ++v) vertex_of_label[g.label(v)] = v;

    std::istringstream in(text);
    std::string header;
    CliqueDecomposition d;
    if (!(in >> header) || header != "lb" || !(in >> d.bound))
        throw std::runtime_error("certificate: missing 'lb <bound>' header");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        VertexSet members;
        int id = 0;
        while (ls >> id) {
            auto it = vertex_of_label.find(id);
            if (it == vertex_of_label.end())
                throw std::runtime_error("certificate: unknown vertex id " + std::to_string(id));
            members.push_back(it->second);
        }
        if (!members.empty()) d.cliques.emplace_back(g, std::move(members));
    }
    return d;
}

} // namespace sumcolor

#ifndef SUMCOLOR_DECOMPOSE_HPP
#define SUMCOLOR_DECOMPOSE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sumcolor/clique_search.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

// Ordered family of pairwise-disjoint cliques covering every vertex of
// the original graph; `bound` is the chromatic sum of the decomposition
// and a lower bound on the chromatic sum of the graph.
struct CliqueDecomposition {
    std::vector<Clique> cliques;
    long long bound = 0;
};

using SizeHistogram = std::map<int, int>; // clique size -> count

struct DecomposeOptions {
    int m_max = 2000;
    int p_max = 100;
    TabuParams tabu;
    SearchBudget max_clique_budget{200000, 0};
    SearchBudget packing_budget{200000, 0};
    double time_limit = 0; // seconds per decomposition, 0 = unlimited
};

// Raised when a decomposition run exceeds its time limit; the partial
// decomposition is discarded (emptiness is the only natural stop rule).
class TimeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// sum s_i(s_i+1)/2: a clique of size s needs colors 1..s.
long long decomposition_bound(const std::vector<int>& sizes);

// Iterated extraction: find a large clique, pool up to m_max cliques of
// that size, pack a maximum disjoint subfamily, remove it, repeat until
// the graph is empty.
CliqueDecomposition exclique(const Graph& g, const DecomposeOptions& opt, std::uint64_t seed);

// Baseline: remove exactly one large clique per round.
CliqueDecomposition oboclique(const Graph& g, const DecomposeOptions& opt, std::uint64_t seed);

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks disjointness, coverage, per-clique adjacency and the bound
// value against g.  Violations are reported, not thrown.
ValidationResult validate(const CliqueDecomposition& d, const Graph& g);

SizeHistogram size_histogram(const CliqueDecomposition& d);

// Certificate: header `lb <bound>`, then one line of sorted 1-based
// original ids per clique; lines ordered by (size desc, first id asc).
std::string write_certificate(const CliqueDecomposition& d, const Graph& g);
CliqueDecomposition read_certificate(const std::string& text, const Graph& g);

} // namespace sumcolor

#endif

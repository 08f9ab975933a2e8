#ifndef SUMCOLOR_ORACLE_HPP
#define SUMCOLOR_ORACLE_HPP

#include <map>

#include "sumcolor/clique_search.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

// Brute-force ground truth for small graphs.  Exceeding a limit is an
// error, never a silent fallback to a heuristic.
namespace oracle {

// Exact maximum clique via bitmask branch-and-bound.
inline constexpr int kMaxCliqueLimit = 64;
// Exhaustive search limits for chromatic sum and optimal decomposition.
inline constexpr int kExactSumLimit = 14;
inline constexpr int kLbStarLimit = 14;

// Color assignment over {1, 2, ...}; colors need not be contiguous.
struct Coloring {
    std::map<int, int> assignment; // vertex -> color
};

// Total of the assigned colors; throws if the coloring is illegal or
// does not cover every vertex.
long long sum_of_coloring(const Graph& g, const Coloring& c);

// Minimum color sum over all legal colorings (colors capped at n, which
// never excludes an optimum).
long long exact_chromatic_sum(const Graph& g);

Clique exact_max_clique(const Graph& g);

// Best achievable clique-decomposition bound: the maximum of
// sum s_i(s_i+1)/2 over all partitions of V into cliques.
long long exact_lb_star(const Graph& g);

} // namespace oracle

} // namespace sumcolor

#endif

#ifndef SUMCOLOR_CLIQUE_SEARCH_HPP
#define SUMCOLOR_CLIQUE_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "sumcolor/graph.hpp"

namespace sumcolor {

// Vertex set whose members are pairwise adjacent; validated on
// construction against the owning graph.
class Clique {
public:
    Clique(const Graph& g, VertexSet members);

    const VertexSet& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    bool operator==(const Clique& other) const { return members_ == other.members_; }
    bool operator<(const Clique& other) const { return members_ < other.members_; }

private:
    VertexSet members_; // sorted
};

struct TabuParams {
    int tenure_base = 7;
    int tenure_span = 8; // tenure drawn from [tenure_base, tenure_base + tenure_span)
    int max_stagnation = 1000;
    int max_iterations_per_try = 100000;
};

// Iteration-counted so results are reproducible; the optional wall-clock
// cap is a safety valve only.
struct SearchBudget {
    std::uint64_t max_iterations = 200000;
    double max_seconds = 0; // 0 = unlimited
};

// Multi-restart tabu search for a large clique.  Moves are ADD (vertex
// adjacent to every current member), SWAP (adjacent to all but one,
// which is dropped) and DROP when neither exists; dropped vertices are
// tabu for a randomized tenure.  The returned size is a lower bound on
// the clique number; on graphs of at most 12 vertices with a budget of
// 10000+ iterations it matches the exact optimum.
Clique find_max_clique(const Graph& g, const TabuParams& params, const SearchBudget& budget,
                       std::uint64_t seed);

// Pool of duplicate-free cliques of exactly the given size.  Collection
// stops once the pool holds m_max cliques or p_max consecutive tabu
// tries added nothing new.  `known`, when given, seeds the pool (the
// caller usually just found a clique of this size).
std::vector<Clique> collect_cliques_of_size(const Graph& g, int size, int m_max, int p_max,
                                            const TabuParams& params, std::uint64_t seed,
                                            const Clique* known = nullptr);

// Maximum set packing over the family via max clique on its
// disjointness graph; output is a pairwise-disjoint subfamily.
std::vector<Clique> select_max_disjoint(const Graph& g, const std::vector<Clique>& family,
                                        const TabuParams& params, std::uint64_t seed,
                                        const SearchBudget& budget = {});

} // namespace sumcolor

#endif

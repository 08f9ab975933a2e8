#include <doctest.h>

#include <algorithm>
#include <set>

#include "sumcolor/clique_search.hpp"
#include "sumcolor/oracle.hpp"
#include "test_support.hpp"

using namespace sumcolor;

namespace {

bool is_valid_clique(const Graph& g, const VertexSet& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!g.adjacent(m[i], m[j])) return false;
    return true;
}

} // namespace

TEST_CASE("Clique validates pairwise adjacency on construction") {
    const Graph g = testsup::path(3);
    CHECK_NOTHROW(Clique(g, {0, 1}));
    CHECK_THROWS_AS(Clique(g, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Clique(g, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Clique(g, {0, 5}), std::out_of_range);
}

TEST_CASE("find_max_clique on easy graphs") {
    const TabuParams params;
    CHECK(find_max_clique(testsup::complete(5), params, {}, 1).size() == 5);
    CHECK(find_max_clique(testsup::edgeless(4), params, {}, 1).size() == 1);

    const Graph g = testsup::fig2();
    const Clique c = find_max_clique(g, params, {}, 7);
    CHECK(c.size() == 3);
    CHECK(is_valid_clique(g, c.members()));
}

TEST_CASE("find_max_clique matches the exhaustive optimum on tiny graphs") {
    const TabuParams params;
    const SearchBudget budget{10000, 0};
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 8 + static_cast<int>(seed % 5);
        const Graph g = testsup::random_graph(n, 0.5, seed * 31 + 1);
        const int omega = testsup::brute_force_max_clique(g);
        const Clique c = find_max_clique(g, params, budget, seed);
        CHECK(is_valid_clique(g, c.members()));
        CHECK(c.size() == omega);
    }
}

TEST_CASE("find_max_clique is deterministic for a fixed seed") {
    const Graph g = testsup::random_graph(20, 0.4, 99);
    const TabuParams params;
    const SearchBudget budget{5000, 0};
    const Clique a = find_max_clique(g, params, budget, 5);
    const Clique b = find_max_clique(g, params, budget, 5);
    CHECK(a.members() == b.members());
}

TEST_CASE("collect_cliques_of_size finds all five triangles of the nine-vertex graph") {
    const Graph g = testsup::fig2();
    const auto pool = collect_cliques_of_size(g, 3, 2000, 100, TabuParams{}, 3);
    std::set<VertexSet> found;
    for (const Clique& c : pool) {
        CHECK(c.size() == 3);
        found.insert(c.members());
    }
    CHECK(found.size() == pool.size()); // duplicate-free
    const int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, G = 6, H = 7, I = 8;
    const std::set<VertexSet> expected = {
        {A, E, I}, {B, C, D}, {B, G, H}, {D, E, F}, {F, G, H}};
    CHECK(found == expected);
}

TEST_CASE("collect_cliques_of_size on a unique maximum") {
    const Graph g = testsup::complete(4);
    const auto pool = collect_cliques_of_size(g, 4, 2000, 5, TabuParams{}, 11);
    REQUIRE(pool.size() == 1);
    CHECK(pool[0].members() == VertexSet{0, 1, 2, 3});
}

TEST_CASE("collect_cliques_of_size finds every edge of C5 at size 2") {
    const Graph g = testsup::cycle(5);
    const auto pool = collect_cliques_of_size(g, 2, 10, 200, TabuParams{}, 17);
    CHECK(pool.size() == 5); // every size-2 clique is an edge
}

TEST_CASE("collect_cliques_of_size respects m_max") {
    const Graph g = testsup::cycle(5);
    const auto pool = collect_cliques_of_size(g, 2, 3, 200, TabuParams{}, 17);
    CHECK(pool.size() == 3);
}

TEST_CASE("select_max_disjoint on the nine-vertex pool") {
    const Graph g = testsup::fig2();
    const auto pool = collect_cliques_of_size(g, 3, 2000, 100, TabuParams{}, 3);
    const auto chosen = select_max_disjoint(g, pool, TabuParams{}, 5);
    REQUIRE(chosen.size() == 3);
    std::set<int> covered;
    for (const Clique& c : chosen)
        for (int v : c.members()) CHECK(covered.insert(v).second); // pairwise disjoint
    CHECK(covered.size() == 9);
}

TEST_CASE("select_max_disjoint trivial and chain cases") {
    const Graph g = testsup::path(4);
    const std::vector<Clique> one = {Clique(g, {0, 1})};
    CHECK(select_max_disjoint(g, one, TabuParams{}, 1).size() == 1);

    const std::vector<Clique> chain = {Clique(g, {0, 1}), Clique(g, {1, 2}), Clique(g, {2, 3})};
    const auto chosen = select_max_disjoint(g, chain, TabuParams{}, 1);
    std::vector<VertexSet> sets;
    for (const Clique& c : chain) sets.push_back(c.members());
    CHECK(static_cast<int>(chosen.size()) == testsup::brute_force_max_packing(sets));
    std::set<VertexSet> picked;
    for (const Clique& c : chosen) picked.insert(c.members());
    CHECK(picked == std::set<VertexSet>{{0, 1}, {2, 3}});
}

TEST_CASE("select_max_disjoint matches brute force on random pools") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = testsup::random_graph(10, 0.6, seed + 70);
        int target = std::min(3, testsup::brute_force_max_clique(g));
        const auto pool = collect_cliques_of_size(g, target, 12, 100, TabuParams{}, seed);
        std::vector<VertexSet> sets;
        for (const Clique& c : pool) sets.push_back(c.members());
        const auto chosen = select_max_disjoint(g, pool, TabuParams{}, seed);
        CHECK(static_cast<int>(chosen.size()) == testsup::brute_force_max_packing(sets));
    }
}

TEST_CASE("pool collection is deterministic for a fixed seed") {
    const Graph g = testsup::random_graph(15, 0.5, 8);
    const int size = find_max_clique(g, TabuParams{}, {10000, 0}, 1).size();
    const auto a = collect_cliques_of_size(g, size, 50, 30, TabuParams{}, 2);
    const auto b = collect_cliques_of_size(g, size, 50, 30, TabuParams{}, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].members() == b[i].members());
}

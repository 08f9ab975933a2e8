#include <doctest.h>

#include <algorithm>
#include <set>

#include "sumcolor/decompose.hpp"
#include "sumcolor/oracle.hpp"
#include "test_support.hpp"

using namespace sumcolor;

TEST_CASE("decomposition_bound") {
    CHECK(decomposition_bound({3, 3, 3}) == 18);
    CHECK(decomposition_bound({1}) == 1);
    CHECK(decomposition_bound({4, 2}) == 13);
    CHECK_THROWS_AS(decomposition_bound({3, 0}), std::invalid_argument);
}

TEST_CASE("decomposition_bound of the published DSJC1000.5 size distribution") {
    // (size, count) pairs of one run on DSJC1000.5; covers all 1000
    // vertices and cannot beat the best reported bound of 6708.
    const std::vector<std::pair<int, int>> dist = {{15, 7}, {14, 26}, {13, 12}, {12, 11},
                                                   {11, 6}, {10, 5},  {9, 5},   {8, 2},
                                                   {7, 4},  {6, 3},   {5, 1},   {4, 2},
                                                   {3, 0},  {2, 3},   {1, 1}};
    std::vector<int> sizes;
    long long vertices = 0;
    for (auto [s, c] : dist) {
        vertices += static_cast<long long>(s) * c;
        for (int i = 0; i < c; ++i) sizes.push_back(s);
    }
    CHECK(vertices == 1000);
    CHECK(decomposition_bound(sizes) <= 6708);
}

TEST_CASE("exclique on a complete graph takes it in one round") {
    const auto d = exclique(testsup::complete(6), DecomposeOptions{}, 1);
    REQUIRE(d.cliques.size() == 1);
    CHECK(d.bound == 21);
    CHECK(validate(d, testsup::complete(6)).ok());
}

TEST_CASE("exclique recovers the three-triangle decomposition") {
    const Graph g = testsup::fig2();
    const auto d = exclique(g, DecomposeOptions{}, 9);
    CHECK(d.bound == 18);
    REQUIRE(d.cliques.size() == 3);
    for (const Clique& c : d.cliques) CHECK(c.size() == 3);
    CHECK(validate(d, g).ok());
}

TEST_CASE("exclique on an edgeless graph yields singletons") {
    const Graph g = testsup::edgeless(7);
    const auto d = exclique(g, DecomposeOptions{}, 2);
    CHECK(d.bound == 7);
    CHECK(d.cliques.size() == 7);
    CHECK(validate(d, g).ok());
}

TEST_CASE("oboclique basics") {
    const auto k6 = oboclique(testsup::complete(6), DecomposeOptions{}, 1);
    CHECK(k6.bound == 21);

    // Star K1,3: the only max clique is an edge, the rest are leaves.
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    const auto d = oboclique(star, DecomposeOptions{}, 5);
    CHECK(d.bound == 5);
    CHECK(d.cliques.size() == 3);
    CHECK(validate(d, star).ok());
}

TEST_CASE("validate flags broken decompositions") {
    const Graph g = testsup::fig2();
    const auto good = exclique(g, DecomposeOptions{}, 9);
    CHECK(validate(good, g).ok());

    CliqueDecomposition dup = good;
    dup.cliques[0] = Clique(g, {0, 4, 8});
    dup.cliques[1] = Clique(g, {4});      // vertex 4 now appears twice, B/C/D uncovered
    dup.bound = 0;
    const auto vdup = validate(dup, g);
    CHECK(!vdup.ok());
    bool saw_disjoint = false, saw_coverage = false, saw_bound = false;
    for (const auto& v : vdup.violations) {
        saw_disjoint |= v.find("disjointness") != std::string::npos;
        saw_coverage |= v.find("coverage") != std::string::npos;
        saw_bound |= v.find("bound") != std::string::npos;
    }
    CHECK(saw_disjoint);
    CHECK(saw_coverage);
    CHECK(saw_bound);
}

TEST_CASE("size_histogram") {
    const Graph g = testsup::fig2();
    const auto d = exclique(g, DecomposeOptions{}, 9);
    const SizeHistogram h = size_histogram(d);
    CHECK(h == SizeHistogram{{3, 3}});

    long long total = 0;
    for (auto [s, c] : h) total += static_cast<long long>(s) * c;
    CHECK(total == g.vertex_count());
}

TEST_CASE("bound is invariant under permutation of the clique list") {
    const Graph g = testsup::fig2();
    auto d = exclique(g, DecomposeOptions{}, 9);
    std::reverse(d.cliques.begin(), d.cliques.end());
    CHECK(validate(d, g).ok()); // bound still matches the permuted list
}

TEST_CASE("heuristic bounds never beat the exact oracles on tiny graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);
        const Graph g = testsup::random_graph(n, 0.2 + 0.3 * (seed % 3), seed * 13 + 1);
        const auto dx = exclique(g, DecomposeOptions{}, seed);
        const auto db = oboclique(g, DecomposeOptions{}, seed);
        CHECK(validate(dx, g).ok());
        CHECK(validate(db, g).ok());
        const long long lb_star = oracle::exact_lb_star(g);
        CHECK(dx.bound <= lb_star);
        CHECK(db.bound <= lb_star);
        CHECK(lb_star <= oracle::exact_chromatic_sum(g));
        CHECK(dx.bound >= n);
    }
}

TEST_CASE("decompositions are reproducible for a fixed seed") {
    const Graph g = testsup::random_graph(30, 0.4, 77);
    const auto a = exclique(g, DecomposeOptions{}, 4);
    const auto b = exclique(g, DecomposeOptions{}, 4);
    REQUIRE(a.cliques.size() == b.cliques.size());
    CHECK(a.bound == b.bound);
    for (std::size_t i = 0; i < a.cliques.size(); ++i)
        CHECK(a.cliques[i].members() == b.cliques[i].members());
}

TEST_CASE("certificate format and round trip") {
    const Graph g = testsup::complete(6);
    const auto d = exclique(g, DecomposeOptions{}, 1);
    CHECK(write_certificate(d, g) == "lb 21\n1 2 3 4 5 6\n");

    const Graph f = testsup::fig2();
    const auto df = exclique(f, DecomposeOptions{}, 9);
    const auto back = read_certificate(write_certificate(df, f), f);
    CHECK(back.bound == df.bound);
    std::set<VertexSet> a, b;
    for (const Clique& c : df.cliques) a.insert(c.members());
    for (const Clique& c : back.cliques) b.insert(c.members());
    CHECK(a == b);
    CHECK(validate(back, f).ok());
}

TEST_CASE("certificate lines are sorted by size then first id") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    CliqueDecomposition d;
    d.cliques = {Clique(g, {3}), Clique(g, {0, 1, 2}), Clique(g, {4})};
    d.bound = decomposition_bound({1, 3, 1});
    CHECK(write_certificate(d, g) == "lb 8\n1 2 3\n4\n5\n");
}

TEST_CASE("decomposition run respects its time limit") {
    DecomposeOptions opt;
    opt.time_limit = 1e-9;
    CHECK_THROWS_AS(exclique(testsup::random_graph(40, 0.5, 3), opt, 1), TimeLimitError);
}

#include "sumcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumcolor::oracle {

namespace {

void require_size(const Graph& g, int limit, const char* what) {
    if (g.vertex_count() > limit)
        throw std::invalid_argument(std::string(what) + ": graph exceeds the exact-solver limit of " +
                                    std::to_string(limit) + " vertices");
    if (g.vertex_count() == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        bits::for_each(g.row(v), g.words(), [&](int u) { adj[v] |= std::uint64_t{1} << u; });
    return adj;
}

struct MaxCliqueSearch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best = 0;
    int best_size = 0;

    void expand(std::uint64_t cur, int cur_size, std::uint64_t cand) {
        if (cur_size > best_size) {
            best = cur;
            best_size = cur_size;
        }
        while (cand) {
            if (cur_size + __builtin_popcountll(cand) <= best_size) return;
            const int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            expand(cur | (std::uint64_t{1} << v), cur_size + 1, cand & adj[v]);
        }
    }
};

} // namespace

long long sum_of_coloring(const Graph& g, const Coloring& c) {
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto it = c.assignment.find(v);
        if (it == c.assignment.end()) throw std::invalid_argument("uncolored vertex");
        if (it->second < 1) throw std::invalid_argument("colors must be positive");
        sum += it->second;
    }
    for (const auto& [v, color] : c.assignment) {
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("colored vertex out of range");
        bits::for_each(g.row(v), g.words(), [&](int u) {
            if (c.assignment.at(u) == color) throw std::invalid_argument("illegal coloring: adjacent vertices share a color");
        });
    }
    return sum;
}

long long exact_chromatic_sum(const Graph& g) {
    require_size(g, kExactSumLimit, "exact_chromatic_sum");
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);

    // Branch on vertices in descending degree order; colors per vertex
    // capped at n.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(n, 0);
    long long best = 0;
    for (int i = 0; i < n; ++i) best += std::min(i + 1, n); // trivial upper bound: distinct colors
    best += 1;

    auto rec = [&](auto&& self, int idx, long long partial) -> void {
        if (partial + (n - idx) >= best) return; // each remaining vertex costs at least 1
        if (idx == n) {
            best = partial;
            return;
        }
        const int v = order[idx];
        for (int col = 1; col <= n; ++col) {
            bool ok = true;
            std::uint64_t nb = adj[v];
            while (nb) {
                const int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (color[u] == col) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = col;
            self(self, idx + 1, partial + col);
            color[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

Clique exact_max_clique(const Graph& g) {
    require_size(g, kMaxCliqueLimit, "exact_max_clique");
    const auto adj = adjacency_masks(g);
    MaxCliqueSearch search{adj};
    std::uint64_t all = (g.vertex_count() == 64) ? ~std::uint64_t{0}
                                                 : ((std::uint64_t{1} << g.vertex_count()) - 1);
    search.expand(0, 0, all);
    VertexSet members;
    bits::for_each(&search.best, 1, [&](int v) { members.push_back(v); });
    return Clique(g, std::move(members));
}

long long exact_lb_star(const Graph& g) {
    require_size(g, kLbStarLimit, "exact_lb_star");
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    const int omega = exact_max_clique(g).size();

    // Canonical partition enumeration: the lowest unassigned vertex
    // joins an existing block (if it stays a clique) or opens a new one.
    std::vector<std::uint64_t> block_mask;
    std::vector<int> block_size;
    long long best = 0;

    auto rec = [&](auto&& self, int v, long long partial) -> void {
        if (v == n) {
            best = std::max(best, partial);
            return;
        }
        // A remaining vertex joining a block of size s adds s+1 <= omega.
        if (partial + static_cast<long long>(n - v) * omega <= best) return;
        for (std::size_t b = 0; b < block_mask.size(); ++b) {
            if ((adj[v] & block_mask[b]) != block_mask[b]) continue;
            block_mask[b] |= std::uint64_t{1} << v;
            ++block_size[b];
            self(self, v + 1, partial + block_size[b]); // bound grows by the new size
            --block_size[b];
            block_mask[b] &= ~(std::uint64_t{1} << v);
        }
        block_mask.push_back(std::uint64_t{1} << v);
        block_size.push_back(1);
        self(self, v + 1, partial + 1);
        block_mask.pop_back();
        block_size.pop_back();
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace sumcolor::oracle

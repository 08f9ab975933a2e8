#include "sumcolor/clique_search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace sumcolor {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Bounded draw without std::uniform_int_distribution so streams are
    // identical across standard libraries.
    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 rng{seed ^ (0x2545f4914f6cdd1dULL * (stream + 1))};
    return rng.next();
}

// One tabu-search worker over a fixed graph.  Tries are independent:
// each starts from a random vertex with cleared tabu state and its own
// RNG stream, so results are reproducible and tries could be reordered.
class TabuWorker {
public:
    explicit TabuWorker(const Graph& g, const TabuParams& params)
        : g_(g), params_(params), n_(g.vertex_count()),
          missing_(n_, 0), in_clique_(n_, 0), tabu_until_(n_, 0) {}

    // Runs one try; stops early when the clique reaches `target` (pass 0
    // to disable).  Returns the best clique seen in this try and adds
    // the iterations spent to `spent`.
    VertexSet run_try(std::uint64_t try_seed, int target, std::uint64_t max_iters,
                      std::uint64_t& spent) {
        rng_.state = try_seed;
        reset();
        add_vertex(static_cast<int>(rng_.below(n_)));
        VertexSet try_best = clique_;
        if (target > 0 && static_cast<int>(clique_.size()) >= target) {
            ++spent;
            return clique_;
        }

        int stagnation = 0;
        std::uint64_t iter = 0;
        while (iter < max_iters && stagnation < params_.max_stagnation) {
            ++iter;
            if (!step(try_best)) break; // isolated single vertex, nothing to do
            if (static_cast<int>(clique_.size()) > static_cast<int>(try_best.size())) {
                try_best = clique_;
                stagnation = 0;
                if (target > 0 && static_cast<int>(clique_.size()) >= target) break;
            } else {
                ++stagnation;
            }
        }
        spent += iter;
        return try_best;
    }

    VertexSet current() const { return clique_; }

private:
    void reset() {
        std::fill(missing_.begin(), missing_.end(), 0);
        std::fill(in_clique_.begin(), in_clique_.end(), 0);
        std::fill(tabu_until_.begin(), tabu_until_.end(), 0);
        clique_.clear();
        clock_ = 0;
    }

    void add_vertex(int v) {
        in_clique_[v] = 1;
        clique_.push_back(v);
        for (int u = 0; u < n_; ++u) ++missing_[u];
        bits::for_each(g_.row(v), g_.words(), [&](int u) { --missing_[u]; });
    }

    void drop_vertex(int v) {
        in_clique_[v] = 0;
        clique_.erase(std::find(clique_.begin(), clique_.end(), v));
        for (int u = 0; u < n_; ++u) --missing_[u];
        bits::for_each(g_.row(v), g_.words(), [&](int u) { ++missing_[u]; });
        tabu_until_[v] = clock_ + params_.tenure_base + rng_.below(params_.tenure_span);
    }

    // One move: ADD if possible, else SWAP, else DROP.  Returns false
    // only when the clique is a single vertex with an empty closed
    // neighborhood, where no move changes anything.
    bool step(const VertexSet& try_best) {
        ++clock_;
        const int k = static_cast<int>(clique_.size());

        adds_.clear();
        swaps_.clear();
        for (int v = 0; v < n_; ++v) {
            if (in_clique_[v]) continue;
            if (missing_[v] == 0) {
                // Aspiration: a tabu ADD that beats the try's best is allowed.
                if (tabu_until_[v] <= clock_ || k + 1 > static_cast<int>(try_best.size()))
                    adds_.push_back(v);
            } else if (missing_[v] == 1 && k >= 2 && tabu_until_[v] <= clock_) {
                swaps_.push_back(v);
            }
        }

        if (!adds_.empty()) {
            add_vertex(adds_[rng_.below(static_cast<std::uint32_t>(adds_.size()))]);
            return true;
        }
        if (!swaps_.empty()) {
            const int v = swaps_[rng_.below(static_cast<std::uint32_t>(swaps_.size()))];
            // The unique member not adjacent to v leaves.
            for (int u : clique_) {
                if (!g_.adjacent(u, v)) {
                    drop_vertex(u);
                    break;
                }
            }
            add_vertex(v);
            return true;
        }
        if (k > 1) {
            drop_vertex(clique_[rng_.below(static_cast<std::uint32_t>(k))]);
            return true;
        }
        // Lone vertex, no neighbors at all: restart inside the try.
        if (g_.degree(clique_[0]) == 0) {
            if (n_ == 1) return false;
            drop_vertex(clique_[0]);
            add_vertex(static_cast<int>(rng_.below(n_)));
            return true;
        }
        return true; // degree > 0 but everything tabu; clock advances and tenures expire
    }

    const Graph& g_;
    const TabuParams& params_;
    int n_;
    std::vector<int> missing_;
    std::vector<char> in_clique_;
    std::vector<std::uint64_t> tabu_until_;
    VertexSet clique_;
    std::uint64_t clock_ = 0;
    SplitMix64 rng_{0};
    std::vector<int> adds_, swaps_;
};

} // namespace

Clique::Clique(const Graph& g, VertexSet members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("duplicate vertex in clique");
    for (int v : members_)
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("clique vertex out of range");
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (!g.adjacent(members_[i], members_[j]))
                throw std::invalid_argument("members are not pairwise adjacent");
}

Clique find_max_clique(const Graph& g, const TabuParams& params, const SearchBudget& budget,
                       std::uint64_t seed) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (g.edge_count() == 0) return Clique(g, {0});

    const auto start = std::chrono::steady_clock::now();
    TabuWorker worker(g, params);
    VertexSet best;
    std::uint64_t spent = 0;
    for (std::uint64_t t = 0; spent < budget.max_iterations; ++t) {
        VertexSet found = worker.run_try(mix_seed(seed, t), 0,
                                         std::min<std::uint64_t>(params.max_iterations_per_try,
                                                                 budget.max_iterations - spent),
                                         spent);
        if (found.size() > best.size()) best = found;
        if (best.size() == static_cast<std::size_t>(g.vertex_count())) break;
        if (budget.max_seconds > 0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            if (el.count() > budget.max_seconds) break;
        }
    }
    std::sort(best.begin(), best.end());
    return Clique(g, std::move(best));
}

std::vector<Clique> collect_cliques_of_size(const Graph& g, int size, int m_max, int p_max,
                                            const TabuParams& params, std::uint64_t seed,
                                            const Clique* known) {
    if (size < 1 || m_max < 1 || p_max < 1) throw std::invalid_argument("bad pool parameters");

    std::set<VertexSet> seen;
    std::vector<Clique> pool;
    auto try_insert = [&](VertexSet members) {
        std::sort(members.begin(), members.end());
        if (!seen.insert(members).second) return false;
        pool.emplace_back(g, std::move(members));
        return true;
    };

    if (known) {
        if (known->size() != size) throw std::invalid_argument("seed clique has wrong size");
        try_insert(known->members());
    }

    TabuWorker worker(g, params);
    int consecutive_failures = 0;
    // Stop once the pool is full or p_max consecutive tries found
    // nothing new; an empty pool keeps searching (a clique of this size
    // exists by precondition), with a generous safety cap.
    const std::uint64_t max_tries = static_cast<std::uint64_t>(p_max) * 1000 + 1000;
    for (std::uint64_t t = 0; static_cast<int>(pool.size()) < m_max; ++t) {
        if (!pool.empty() && consecutive_failures >= p_max) break;
        if (t >= max_tries) {
            if (pool.empty()) throw std::runtime_error("no clique of requested size found");
            break;
        }
        std::uint64_t spent = 0;
        VertexSet found = worker.run_try(mix_seed(seed ^ 0x706f6f6cULL, t), size,
                                         params.max_iterations_per_try, spent);
        if (static_cast<int>(found.size()) >= size && try_insert(std::move(found)))
            consecutive_failures = 0;
        else
            ++consecutive_failures;
    }
    return pool;
}

std::vector<Clique> select_max_disjoint(const Graph& g, const std::vector<Clique>& family,
                                        const TabuParams& params, std::uint64_t seed,
                                        const SearchBudget& budget) {
    if (family.empty()) throw std::invalid_argument("empty family");
    std::vector<VertexSet> sets;
    sets.reserve(family.size());
    for (const Clique& c : family) sets.push_back(c.members());

    const Graph dg = disjointness_graph(sets);
    const Clique packing = find_max_clique(dg, params, budget, seed);

    std::vector<Clique> out;
    out.reserve(packing.size());
    for (int idx : packing.members()) out.emplace_back(g, family[idx].members());
    return out;
}

} // namespace sumcolor

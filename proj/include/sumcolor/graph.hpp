#ifndef SUMCOLOR_GRAPH_HPP
#define SUMCOLOR_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sumcolor {

// Sorted, duplicate-free list of 0-based vertex ids.
using VertexSet = std::vector<int>;

// Immutable-after-construction simple undirected graph.
// Adjacency is a packed bit matrix: row v holds the neighborhood of v,
// so membership tests are O(1) and neighborhood intersections are
// word-parallel.  Vertex ids are contiguous and 0-based; the original
// 1-based DIMACS ids survive renumbering in labels().
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int words() const { return words_; }

    // Self-loops are rejected; duplicate edges are ignored.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

    int degree(int v) const;

    // 2|E| / (|V|(|V|-1)); 0 for graphs with fewer than 2 vertices.
    double density() const;

    // Original 1-based DIMACS id of vertex v (v+1 unless renumbered).
    int label(int v) const { return labels_[v]; }
    const std::vector<int>& labels() const { return labels_; }
    void set_labels(std::vector<int> labels);

    VertexSet neighbors(int v) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<int> labels_;
};

Graph complement(const Graph& g);

// Induced subgraph on V \ s; labels follow the surviving vertices.
Graph remove_vertices(const Graph& g, const VertexSet& s);

// One vertex per family member; i ~ j iff family[i] and family[j] are
// disjoint.  Cliques in the result are exactly the pairwise-disjoint
// subfamilies (maximum set packing as maximum clique).
Graph disjointness_graph(const std::vector<VertexSet>& family);

namespace bits {

inline bool test(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

template <typename F>
void for_each(const std::uint64_t* w, int nwords, F&& f) {
    for (int i = 0; i < nwords; ++i) {
        std::uint64_t x = w[i];
        while (x) {
            f((i << 6) + __builtin_ctzll(x));
            x &= x - 1;
        }
    }
}

inline int count(const std::uint64_t* w, int nwords) {
    int c = 0;
    for (int i = 0; i < nwords; ++i) c += __builtin_popcountll(w[i]);
    return c;
}

} // namespace bits

} // namespace sumcolor

#endif

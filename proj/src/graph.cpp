#include "sumcolor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace sumcolor {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    labels_.resize(n_);
    std::iota(labels_.begin(), labels_.end(), 1);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return bits::count(row(v), words_);
}

double Graph::density() const {
    if (n_ < 2) return 0.0;
    return 2.0 * static_cast<double>(m_) / (static_cast<double>(n_) * (n_ - 1));
}

void Graph::set_labels(std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("label count mismatch");
    labels_ = std::move(labels);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    VertexSet out;
    bits::for_each(row(v), words_, [&](int u) { out.push_back(u); });
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    c.set_labels(g.labels());
    return c;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
        removed[v] = 1;
    }
    std::vector<int> old_of;
    std::vector<int> new_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            new_of[v] = static_cast<int>(old_of.size());
            old_of.push_back(v);
        }
    }
    Graph h(static_cast<int>(old_of.size()));
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i) {
        bits::for_each(g.row(old_of[i]), g.words(), [&](int u) {
            if (new_of[u] > i) h.add_edge(i, new_of[u]);
        });
    }
    std::vector<int> labels(old_of.size());
    for (std::size_t i = 0; i < old_of.size(); ++i) labels[i] = g.label(old_of[i]);
    h.set_labels(std::move(labels));
    return h;
}

Graph disjointness_graph(const std::vector<VertexSet>& family) {
    if (family.empty()) throw std::invalid_argument("empty family");
    const int k = static_cast<int>(family.size());
    std::vector<VertexSet> sorted(family);
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    Graph g(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool disjoint = true;
            auto a = sorted[i].begin();
            auto b = sorted[j].begin();
            while (a != sorted[i].end() && b != sorted[j].end()) {
                if (*a < *b) ++a;
                else if (*b < *a) ++b;
                else { disjoint = false; break; }
            }
            if (disjoint) g.add_edge(i, j);
        }
    }
    return g;
}

} // namespace sumcolor

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ramsey {

using Vertex = int;
using Color = int;  // colors are 1..n
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple loopless graph on vertices 0..vertex_count()-1.
///
/// Adjacency is a bitset per vertex; the edge list is kept sorted with the
/// smaller endpoint first. Values are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph.
    explicit Graph(int vertex_count)
        : n_(vertex_count), words_((vertex_count + 63) / 64),
          adj_(static_cast<std::size_t>(vertex_count) * words_, 0) {
        if (vertex_count < 0) throw InvalidInput("negative vertex count");
    }

    /// Builds from an arbitrary edge list, normalizing and deduplicating.
    static Graph from_edges(int vertex_count, std::span<const Edge> edge_list) {
        Graph g(vertex_count);
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= vertex_count) throw VertexOutOfRange(u, vertex_count);
            if (v < 0 || v >= vertex_count) throw VertexOutOfRange(v, vertex_count);
            if (u == v) throw LoopEdge(u);
            g.set(u, v);
        }
        g.rebuild_edges();
        return g;
    }

    /// Builds from a symmetric predicate evaluated on every pair u < v.
    template <class Pred>
    static Graph from_predicate(int vertex_count, Pred&& adjacent) {
        Graph g(vertex_count);
        for (Vertex v = 1; v < vertex_count; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (adjacent(u, v)) g.set(u, v);
        g.rebuild_edges();
        return g;
    }

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (adj_[row(u) + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(Vertex v) const noexcept {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(adj_[row(v) + w]);
        return d;
    }

    /// Neighbourhood as a 64-bit mask; only meaningful for graphs with at
    /// most 64 vertices.
    std::uint64_t neighbor_mask(Vertex v) const noexcept {
        return words_ == 0 ? 0 : adj_[row(v)];
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w = 0; w < n_; ++w)
            if (adjacent(v, w)) out.push_back(w);
        return out;
    }

    /// Subgraph induced on `vertices`, renamed 0..k-1 in the given order.
    Graph induced(std::span<const Vertex> vertices) const {
        const int k = static_cast<int>(vertices.size());
        return from_predicate(k, [&](Vertex a, Vertex b) {
            return adjacent(vertices[a], vertices[b]);
        });
    }

    /// Relabeled copy: vertex v becomes new_label[v].
    Graph permuted(std::span<const Vertex> new_label) const {
        Graph g(n_);
        for (auto [u, v] : edges_) g.set(new_label[u], new_label[v]);
        g.rebuild_edges();
        return g;
    }

    /// Relabeled copy whose vertex i is old vertex order[i].
    Graph reordered(std::span<const Vertex> order) const { return induced(order); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t row(Vertex v) const noexcept { return static_cast<std::size_t>(v) * words_; }

    void set(Vertex u, Vertex v) noexcept {
        adj_[row(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        adj_[row(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    void rebuild_edges() {
        edges_.clear();
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) edges_.emplace_back(u, v);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
};

inline Graph make_graph(int vertex_count, std::span<const Edge> edge_list) {
    return Graph::from_edges(vertex_count, edge_list);
}

inline Graph make_graph(int vertex_count, std::initializer_list<Edge> edge_list) {
    return Graph::from_edges(vertex_count, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

/// A graph together with an optional linear order and an optional coloring
/// into 1..n. When ordered, the order is the vertex index order.
struct OrderedColoredGraph {
    Graph graph;
    int n = 1;
    std::optional<std::vector<Color>> colors;
    bool ordered = true;

    OrderedColoredGraph() = default;

    OrderedColoredGraph(Graph g, int color_universe, std::optional<std::vector<Color>> coloring,
                        bool is_ordered = true)
        : graph(std::move(g)), n(color_universe), colors(std::move(coloring)), ordered(is_ordered) {
        if (n < 1) throw InvalidInput("color universe must be positive");
        if (colors) {
            if (static_cast<int>(colors->size()) != graph.vertex_count())
                throw InvalidInput("coloring is not total");
            for (Color c : *colors)
                if (c < 1 || c > n)
                    throw InvalidInput("color " + std::to_string(c) + " outside 1.." +
                                       std::to_string(n));
        }
    }

    int vertex_count() const noexcept { return graph.vertex_count(); }
    bool colored() const noexcept { return colors.has_value(); }

    Color color(Vertex v) const { return (*colors)[static_cast<std::size_t>(v)]; }

    friend bool operator==(const OrderedColoredGraph&, const OrderedColoredGraph&) = default;
};

/// Uncolored ordered structure in index order.
inline OrderedColoredGraph as_ordered(Graph g) {
    return OrderedColoredGraph(std::move(g), 1, std::nullopt, true);
}

inline OrderedColoredGraph colored_ordered(Graph g, int n, std::vector<Color> colors) {
    return OrderedColoredGraph(std::move(g), n, std::move(colors), true);
}

inline bool is_proper(const Graph& g, std::span<const Color> colors) {
    for (auto [u, v] : g.edges())
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
    return true;
}

inline bool is_proper_coloring(const OrderedColoredGraph& g) {
    if (!g.colors) throw MissingColoring();
    return is_proper(g.graph, *g.colors);
}

inline bool is_monotone(const OrderedColoredGraph& g) {
    if (!g.colors) throw MissingColoring();
    if (!g.ordered) throw NotOrdered();
    return std::is_sorted(g.colors->begin(), g.colors->end());
}

namespace detail {

inline bool extend_clique(const Graph& g, std::vector<Vertex>& clique, Vertex next, int m) {
    if (static_cast<int>(clique.size()) == m) return true;
    for (Vertex v = next; v < g.vertex_count(); ++v) {
        if (static_cast<int>(clique.size()) + (g.vertex_count() - v) < m) return false;
        bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, v); });
        if (!ok) continue;
        clique.push_back(v);
        if (extend_clique(g, clique, v + 1, m)) return true;
        clique.pop_back();
    }
    return false;
}

} // namespace detail

/// True iff some m vertices are pairwise adjacent.
inline bool contains_clique(const Graph& g, int m) {
    if (m < 1) throw InvalidInput("clique size must be at least 1");
    std::vector<Vertex> clique;
    return detail::extend_clique(g, clique, 0, m);
}

inline int clique_number(const Graph& g) {
    int m = 0;
    while (m < g.vertex_count() && contains_clique(g, m + 1)) ++m;
    return m;
}

// Common families.

inline Graph complete_graph(int m) {
    return Graph::from_predicate(m, [](Vertex, Vertex) { return true; });
}

inline Graph edgeless_graph(int m) { return Graph(m); }

inline Graph path_graph(int m) {
    return Graph::from_predicate(m, [](Vertex u, Vertex v) { return v == u + 1; });
}

inline Graph cycle_graph(int m) {
    return Graph::from_predicate(m, [m](Vertex u, Vertex v) {
        return v == u + 1 || (u == 0 && v == m - 1 && m > 2);
    });
}

/// Complete multipartite graph with `parts` parts of `part_size` vertices;
/// part i occupies the consecutive indices [i*part_size, (i+1)*part_size).
inline Graph complete_multipartite(int parts, int part_size) {
    return Graph::from_predicate(parts * part_size, [part_size](Vertex u, Vertex v) {
        return u / part_size != v / part_size;
    });
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    std::vector<Edge> es(a.edges());
    for (auto [u, v] : b.edges()) es.emplace_back(u + na, v + na);
    return Graph::from_edges(na + b.vertex_count(), es);
}

} // namespace ramsey

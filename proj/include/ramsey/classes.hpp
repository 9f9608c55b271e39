#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace ramsey {

inline constexpr int default_chromatic_cap = 12;
inline constexpr int max_unordered_enumeration = 7;
inline constexpr int max_ordered_enumeration = 6;
inline constexpr int max_colored_enumeration = 5;

// ---------------------------------------------------------------------------
// Chromatic number

namespace detail {

inline int greedy_color_count(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Color> color(static_cast<std::size_t>(g.vertex_count()), 0);
    int used = 0;
    for (Vertex v : order) {
        std::vector<char> taken(static_cast<std::size_t>(used) + 2, 0);
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (g.adjacent(v, w) && color[w] > 0) taken[static_cast<std::size_t>(color[w])] = 1;
        Color c = 1;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

/// Backtracking k-coloring in a fixed vertex order; a vertex may only open
/// color max_used+1, which removes color-permutation symmetry.
inline bool colorable_from(const Graph& g, const std::vector<Vertex>& order, std::vector<Color>& color,
                           std::size_t at, int k, int max_used) {
    if (at == order.size()) return true;
    const Vertex v = order[at];
    const int limit = std::min(k, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
        bool clash = false;
        for (Vertex w = 0; w < g.vertex_count() && !clash; ++w)
            clash = g.adjacent(v, w) && color[w] == c;
        if (clash) continue;
        color[v] = c;
        if (colorable_from(g, order, color, at + 1, k, std::max(max_used, c))) return true;
        color[v] = 0;
    }
    return false;
}

inline std::vector<Vertex> degree_order(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

} // namespace detail

inline bool is_k_colorable(const Graph& g, int k) {
    if (g.vertex_count() == 0) return true;
    if (k <= 0) return false;
    const auto order = detail::degree_order(g);
    std::vector<Color> color(static_cast<std::size_t>(g.vertex_count()), 0);
    return detail::colorable_from(g, order, color, 0, k, 0);
}

/// Exact chromatic number: clique lower bound, greedy upper bound, and a
/// backtracking decision for each k in between. The empty graph has 0.
inline int chromatic_number(const Graph& g, int cap = default_chromatic_cap) {
    check_cap(g.vertex_count(), cap);
    if (g.vertex_count() == 0) return 0;
    const int lower = std::max(1, clique_number(g));
    const int upper = detail::greedy_color_count(g, detail::degree_order(g));
    for (int k = lower; k < upper; ++k)
        if (is_k_colorable(g, k)) return k;
    return upper;
}

// ---------------------------------------------------------------------------
// Classes

enum class ClassKind {
    n_colorable,
    n_colorable_ordered,
    n_chromatic,
    n_chromatic_ordered,
    kn_free,
    colored_ordered,
    monotone_colored_ordered,
};

struct ClassSpec {
    ClassKind kind;
    int n;

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

inline std::string_view to_string(ClassKind kind) {
    switch (kind) {
    case ClassKind::n_colorable: return "n_colorable";
    case ClassKind::n_colorable_ordered: return "n_colorable_ordered";
    case ClassKind::n_chromatic: return "n_chromatic";
    case ClassKind::n_chromatic_ordered: return "n_chromatic_ordered";
    case ClassKind::kn_free: return "kn_free";
    case ClassKind::colored_ordered: return "colored_ordered";
    case ClassKind::monotone_colored_ordered: return "monotone_colored_ordered";
    }
    return "?";
}

inline ClassKind parse_class_kind(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    for (auto kind : {ClassKind::n_colorable, ClassKind::n_colorable_ordered, ClassKind::n_chromatic,
                      ClassKind::n_chromatic_ordered, ClassKind::kn_free, ClassKind::colored_ordered,
                      ClassKind::monotone_colored_ordered})
        if (s == to_string(kind)) return kind;
    throw InvalidInput("unknown class kind '" + std::string(name) + "'");
}

inline bool is_ordered_kind(ClassKind kind) {
    return kind != ClassKind::n_colorable && kind != ClassKind::n_chromatic && kind != ClassKind::kn_free;
}

inline bool is_colored_kind(ClassKind kind) {
    return kind == ClassKind::colored_ordered || kind == ClassKind::monotone_colored_ordered;
}

inline bool is_member(const OrderedColoredGraph& g, const ClassSpec& spec) {
    if (spec.n < 1) throw InvalidInput("class parameter n must be positive");
    switch (spec.kind) {
    case ClassKind::n_colorable: return chromatic_number(g.graph) <= spec.n;
    case ClassKind::n_chromatic: return chromatic_number(g.graph) == spec.n;
    case ClassKind::n_colorable_ordered: return g.ordered && chromatic_number(g.graph) <= spec.n;
    case ClassKind::n_chromatic_ordered: return g.ordered && chromatic_number(g.graph) == spec.n;
    case ClassKind::kn_free: return !contains_clique(g.graph, spec.n);
    case ClassKind::colored_ordered:
    case ClassKind::monotone_colored_ordered: {
        if (!g.ordered || !g.colors) return false;
        if (std::any_of(g.colors->begin(), g.colors->end(), [&](Color c) { return c > spec.n; }))
            return false;
        if (!is_proper_coloring(g)) return false;
        return spec.kind == ClassKind::colored_ordered || is_monotone(g);
    }
    }
    return false;
}

inline bool is_member(const Graph& g, const ClassSpec& spec) { return is_member(as_ordered(g), spec); }

// ---------------------------------------------------------------------------
// Enumeration

struct Member {
    OrderedColoredGraph structure;
    std::string certificate;
};

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i, w);
        });
    for (auto& t : pool) t.join();
}

} // namespace detail

/// One canonical representative per isomorphism class of graphs on exactly
/// `v` vertices, sorted by certificate. Built by adding a vertex with every
/// possible neighbourhood to each class on v-1 vertices; every graph arises
/// this way since deleting its last vertex leaves some smaller class.
inline std::vector<Graph> enumerate_graphs(int v, int jobs = 1) {
    check_cap(v, max_unordered_enumeration);
    std::map<std::string, Graph> level{{"", Graph(0)}};
    for (int size = 1; size <= v; ++size) {
        std::vector<Graph> parents;
        for (auto& [cert, g] : level) parents.push_back(std::move(g));
        const auto workers = static_cast<std::size_t>(std::max(1, jobs));
        std::vector<std::map<std::string, Graph>> partial(workers);
        detail::parallel_for(parents.size(), jobs, [&](std::size_t i, std::size_t w) {
            const Graph& parent = parents[i];
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
                std::vector<Edge> edges(parent.edges());
                for (Vertex u = 0; u < size - 1; ++u)
                    if ((mask >> u) & 1u) edges.emplace_back(u, size - 1);
                const Graph child = Graph::from_edges(size, edges);
                const auto cf = canonical_form(child, max_unordered_enumeration);
                if (!partial[w].count(cf.certificate))
                    partial[w].emplace(cf.certificate, child.permuted(cf.relabeling));
            }
        });
        level.clear();
        for (auto& part : partial) level.merge(part);
    }
    std::vector<Graph> out;
    for (auto& [cert, g] : level) out.push_back(std::move(g));
    return out;
}

/// Calls fn(graph) for every labeled graph on v vertices, in increasing
/// order of the adjacency bit string read as a binary number.
template <class Fn>
void for_each_labeled_graph(int v, Fn&& fn) {
    const int pairs = v * (v - 1) / 2;
    std::vector<Edge> slots;
    for (Vertex j = 1; j < v; ++j)
        for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        std::vector<Edge> edges;
        for (int s = 0; s < pairs; ++s)
            if ((bits >> (pairs - 1 - s)) & 1u) edges.push_back(slots[static_cast<std::size_t>(s)]);
        fn(Graph::from_edges(v, edges));
    }
}

/// Calls fn(colors) for every sequence in [n]^v that properly colors g,
/// in lexicographic order; with `monotone`, only nondecreasing sequences.
template <class Fn>
void for_each_proper_coloring(const Graph& g, int n, bool monotone, Fn&& fn) {
    const int v = g.vertex_count();
    std::vector<Color> colors(static_cast<std::size_t>(v), 0);
    auto rec = [&](auto&& self, Vertex at) -> void {
        if (at == v) {
            fn(std::as_const(colors));
            return;
        }
        const Color start = (monotone && at > 0) ? colors[at - 1] : 1;
        for (Color c = start; c <= n; ++c) {
            bool clash = false;
            for (Vertex u = 0; u < at && !clash; ++u) clash = g.adjacent(u, at) && colors[u] == c;
            if (clash) continue;
            colors[at] = c;
            self(self, at + 1);
        }
        colors[at] = 0;
    };
    rec(rec, 0);
}

/// Every member of `spec` with min_vertices..max_vertices vertices, one per
/// isomorphism class, ordered by (vertex count, certificate).
inline std::vector<Member> enumerate_members(const ClassSpec& spec, int max_vertices, int min_vertices = 0,
                                             int jobs = 1) {
    std::vector<Member> out;
    if (!is_ordered_kind(spec.kind)) {
        check_cap(max_vertices, max_unordered_enumeration);
        for (int v = std::max(0, min_vertices); v <= max_vertices; ++v)
            for (auto& g : enumerate_graphs(v, jobs)) {
                OrderedColoredGraph s(std::move(g), 1, std::nullopt, false);
                if (is_member(s, spec)) out.push_back({s, adjacency_bits(s.graph)});
            }
        return out;
    }
    if (!is_colored_kind(spec.kind)) {
        check_cap(max_vertices, max_ordered_enumeration);
        for (int v = std::max(0, min_vertices); v <= max_vertices; ++v)
            for_each_labeled_graph(v, [&](const Graph& g) {
                auto s = as_ordered(g);
                if (is_member(s, spec)) out.push_back({s, ordered_certificate(s)});
            });
    } else {
        check_cap(max_vertices, max_colored_enumeration);
        const bool monotone = spec.kind == ClassKind::monotone_colored_ordered;
        for (int v = std::max(0, min_vertices); v <= max_vertices; ++v)
            for_each_labeled_graph(v, [&](const Graph& g) {
                for_each_proper_coloring(g, spec.n, monotone, [&](const std::vector<Color>& colors) {
                    auto s = colored_ordered(g, spec.n, colors);
                    out.push_back({s, ordered_certificate(s)});
                });
            });
    }
    std::stable_sort(out.begin(), out.end(), [](const Member& a, const Member& b) {
        if (a.structure.vertex_count() != b.structure.vertex_count())
            return a.structure.vertex_count() < b.structure.vertex_count();
        return a.certificate < b.certificate;
    });
    return out;
}

} // namespace ramsey

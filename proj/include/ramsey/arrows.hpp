#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "classes.hpp"
#include "degrees.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace ramsey {

inline constexpr unsigned long long default_arrow_budget = 1ull << 26;
inline constexpr int default_host_cap = 4096;
inline constexpr int default_pattern_cap = 12;

// ---------------------------------------------------------------------------
// Embeddings and copies

/// Induced embedding: map[i] is the host vertex receiving pattern vertex i.
struct Embedding {
    std::vector<Vertex> map;

    std::vector<Vertex> image() const {
        std::vector<Vertex> s(map);
        std::sort(s.begin(), s.end());
        return s;
    }

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

namespace detail {

inline void check_same_kind(const OrderedColoredGraph& pattern, const OrderedColoredGraph& host) {
    if (pattern.ordered != host.ordered)
        throw InvalidInput("pattern and host must both be ordered or both unordered");
    if (pattern.colored() != host.colored())
        throw InvalidInput("pattern and host must both be colored or both uncolored");
}

/// Visits every induced embedding (edges and non-edges preserved; colors
/// preserved when colored; strictly increasing when ordered). Ordered
/// embeddings come out in lexicographic order of the image. Stops when
/// visit returns false.
template <class Visit>
void for_each_embedding(const OrderedColoredGraph& pattern, const OrderedColoredGraph& host, Visit&& visit) {
    check_same_kind(pattern, host);
    check_cap(pattern.vertex_count(), default_pattern_cap);
    check_cap(host.vertex_count(), default_host_cap);
    const int k = pattern.vertex_count();
    const int h = host.vertex_count();
    if (k > h) return;
    std::vector<Vertex> map(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(h), 0);
    bool stop = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            stop = !visit(std::as_const(map));
            return;
        }
        const Vertex first = (pattern.ordered && i > 0) ? map[i - 1] + 1 : 0;
        const Vertex last = pattern.ordered ? h - (k - i) : h - 1;
        for (Vertex w = first; w <= last && !stop; ++w) {
            if (used[w]) continue;
            if (pattern.colored() && pattern.color(i) != host.color(w)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = pattern.graph.adjacent(j, i) == host.graph.adjacent(map[j], w);
            if (!ok) continue;
            map[i] = w;
            used[w] = 1;
            self(self, i + 1);
            used[w] = 0;
        }
        map[i] = -1;
    };
    rec(rec, 0);
}

} // namespace detail

/// The copies of `pattern` in `host`: one embedding per image set, in
/// lexicographic order of image sets. For ordered structures each image set
/// carries a unique embedding; for unordered ones the first found is kept.
inline std::vector<Embedding> enumerate_copies(const OrderedColoredGraph& pattern, const OrderedColoredGraph& host) {
    std::vector<Embedding> copies;
    if (pattern.ordered) {
        detail::for_each_embedding(pattern, host, [&](const std::vector<Vertex>& map) {
            copies.push_back({map});
            return true;
        });
        return copies;
    }
    std::map<std::vector<Vertex>, Embedding> by_image;
    detail::for_each_embedding(pattern, host, [&](const std::vector<Vertex>& map) {
        Embedding e{map};
        by_image.emplace(e.image(), std::move(e));
        return true;
    });
    for (auto& [image, e] : by_image) copies.push_back(std::move(e));
    return copies;
}

inline std::uint64_t count_embeddings(const OrderedColoredGraph& pattern, const OrderedColoredGraph& host) {
    std::uint64_t count = 0;
    detail::for_each_embedding(pattern, host, [&](const std::vector<Vertex>&) {
        ++count;
        return true;
    });
    return count;
}

inline bool embeds(const OrderedColoredGraph& pattern, const OrderedColoredGraph& host) {
    bool found = false;
    detail::for_each_embedding(pattern, host, [&](const std::vector<Vertex>&) {
        found = true;
        return false;
    });
    return found;
}

// ---------------------------------------------------------------------------
// Arrow relation Z -> (Y)^X_{k,t}

struct ColoringOfCopies {
    std::vector<Color> colors;  // colors[i] colors copy i; values in 1..universe
    int universe = 1;

    friend bool operator==(const ColoringOfCopies&, const ColoringOfCopies&) = default;
};

struct ArrowQuery {
    OrderedColoredGraph host;     // Z
    OrderedColoredGraph target;   // Y
    OrderedColoredGraph pattern;  // X
    int k = 2;
    int t = 1;
};

struct ArrowResult {
    bool holds = false;
    std::optional<ColoringOfCopies> bad_coloring;  // present iff !holds
    unsigned long long colorings_examined = 0;     // search nodes visited
};

namespace detail {

/// For each copy of `target` in the host, the indices of pattern copies
/// whose image lies inside it.
inline std::vector<std::vector<int>> copies_inside(const std::vector<Embedding>& target_copies,
                                                   const std::vector<Embedding>& pattern_copies,
                                                   int host_size) {
    std::vector<std::vector<int>> inside;
    std::vector<char> member(static_cast<std::size_t>(host_size), 0);
    for (const auto& y : target_copies) {
        for (Vertex v : y.map) member[v] = 1;
        std::vector<int> idx;
        for (std::size_t i = 0; i < pattern_copies.size(); ++i) {
            const auto& m = pattern_copies[i].map;
            if (std::all_of(m.begin(), m.end(), [&](Vertex v) { return member[v] != 0; }))
                idx.push_back(static_cast<int>(i));
        }
        for (Vertex v : y.map) member[v] = 0;
        inside.push_back(std::move(idx));
    }
    return inside;
}

/// Depth-first search, in lexicographic order, for a coloring of copies
/// 0..m-1 with colors 1..k in which every constraint set sees more than t
/// colors. A copy may only open color max_used+1, so the first hit is the
/// lexicographically least bad coloring.
class BadColoringSearch {
public:
    BadColoringSearch(int copies, const std::vector<std::vector<int>>& sets, int k, int t,
                      unsigned long long budget)
        : m_(copies), k_(k), t_(t), budget_(budget), sets_(sets),
          containing_(static_cast<std::size_t>(copies)),
          counts_(sets.size(), std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
          distinct_(sets.size(), 0), remaining_(sets.size(), 0),
          colors_(static_cast<std::size_t>(copies), 0) {
        for (std::size_t s = 0; s < sets.size(); ++s) {
            remaining_[s] = static_cast<int>(sets[s].size());
            for (int i : sets[s]) containing_[i].push_back(static_cast<int>(s));
        }
    }

    std::optional<std::vector<Color>> run() {
        for (std::size_t s = 0; s < sets_.size(); ++s)
            if (remaining_[s] <= t_) return std::nullopt;
        if (search(0, 0)) return colors_;
        return std::nullopt;
    }

    unsigned long long nodes() const noexcept { return nodes_; }

private:
    bool search(int i, int max_used) {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
        if (i == m_) return true;
        for (Color c = 1; c <= std::min(k_, max_used + 1); ++c) {
            colors_[i] = c;
            bool viable = true;
            for (int s : containing_[i]) {
                if (counts_[s][c]++ == 0) ++distinct_[s];
                --remaining_[s];
                if (distinct_[s] + remaining_[s] <= t_) viable = false;
            }
            if (viable && search(i + 1, std::max(max_used, c))) return true;
            for (int s : containing_[i]) {
                if (--counts_[s][c] == 0) --distinct_[s];
                ++remaining_[s];
            }
        }
        colors_[i] = 0;
        return false;
    }

    int m_, k_, t_;
    unsigned long long budget_;
    unsigned long long nodes_ = 0;
    const std::vector<std::vector<int>>& sets_;
    std::vector<std::vector<int>> containing_;
    std::vector<std::vector<int>> counts_;
    std::vector<int> distinct_;
    std::vector<int> remaining_;
    std::vector<Color> colors_;
};

} // namespace detail

/// Decides Z -> (Y)^X_{k,t}: every k-coloring of the copies of X in Z leaves
/// some copy of Y whose X-copies carry at most t colors. On failure the
/// lexicographically least bad coloring is returned.
inline ArrowResult arrow_check(const ArrowQuery& q, unsigned long long budget = default_arrow_budget) {
    if (q.k < 1) throw InvalidInput("k must be at least 1");
    if (q.t < 1 || q.t > q.k) throw InvalidInput("t must lie in 1..k");
    detail::check_same_kind(q.pattern, q.host);
    detail::check_same_kind(q.target, q.host);

    const auto x_copies = enumerate_copies(q.pattern, q.host);
    const auto y_copies = enumerate_copies(q.target, q.host);
    const auto inside = detail::copies_inside(y_copies, x_copies, q.host.vertex_count());

    detail::BadColoringSearch search(static_cast<int>(x_copies.size()), inside, q.k, q.t, budget);
    ArrowResult result;
    auto bad = search.run();
    result.colorings_examined = search.nodes();
    result.holds = !bad.has_value();
    if (bad) result.bad_coloring = ColoringOfCopies{std::move(*bad), q.k};
    return result;
}

/// Re-checks a claimed bad coloring directly: every copy of Y must see more
/// than t colors among its X-copies.
inline bool is_bad_coloring(const ArrowQuery& q, const ColoringOfCopies& coloring) {
    const auto x_copies = enumerate_copies(q.pattern, q.host);
    if (coloring.colors.size() != x_copies.size()) return false;
    if (std::any_of(coloring.colors.begin(), coloring.colors.end(),
                    [&](Color c) { return c < 1 || c > q.k; }))
        return false;
    const auto y_copies = enumerate_copies(q.target, q.host);
    for (const auto& idx : detail::copies_inside(y_copies, x_copies, q.host.vertex_count())) {
        std::set<Color> seen;
        for (int i : idx) seen.insert(coloring.colors[static_cast<std::size_t>(i)]);
        if (static_cast<int>(seen.size()) <= q.t) return false;
    }
    return true;
}

struct SimultaneousArrowResult {
    bool holds = false;
    std::optional<std::vector<ColoringOfCopies>> bad_coloring;  // one coloring per pattern
    unsigned long long colorings_examined = 0;
};

/// True iff for every simultaneous k-coloring of the copies of each pattern,
/// some copy of Y is monochromatic for every pattern separately.
inline SimultaneousArrowResult simultaneous_arrow_check(const OrderedColoredGraph& host,
                                                        const OrderedColoredGraph& target,
                                                        const std::vector<OrderedColoredGraph>& patterns, int k,
                                                        unsigned long long budget = default_arrow_budget) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    detail::check_same_kind(target, host);
    const auto y_copies = enumerate_copies(target, host);

    // Copies of all patterns in one list; groups[y] lists, per pattern, the
    // copies inside Y-copy y.
    std::vector<int> owner;
    std::vector<std::size_t> offset;
    std::vector<std::vector<std::vector<int>>> groups(y_copies.size());
    for (std::size_t p = 0; p < patterns.size(); ++p) {
        detail::check_same_kind(patterns[p], host);
        const auto copies = enumerate_copies(patterns[p], host);
        offset.push_back(owner.size());
        const auto inside = detail::copies_inside(y_copies, copies, host.vertex_count());
        for (std::size_t y = 0; y < y_copies.size(); ++y) {
            std::vector<int> g;
            for (int i : inside[y]) g.push_back(static_cast<int>(offset.back()) + i);
            groups[y].push_back(std::move(g));
        }
        owner.insert(owner.end(), copies.size(), static_cast<int>(p));
    }
    offset.push_back(owner.size());
    const int m = static_cast<int>(owner.size());

    SimultaneousArrowResult result;
    auto finish_bad = [&](const std::vector<Color>& colors) {
        std::vector<ColoringOfCopies> per_pattern;
        for (std::size_t p = 0; p < patterns.size(); ++p)
            per_pattern.push_back({std::vector<Color>(colors.begin() + static_cast<std::ptrdiff_t>(offset[p]),
                                                      colors.begin() + static_cast<std::ptrdiff_t>(offset[p + 1])),
                                   k});
        result.holds = false;
        result.bad_coloring = std::move(per_pattern);
    };

    // A Y-copy is bad once some group in it holds two colors. It can still
    // become bad while some group of size >= 2 has an unassigned copy.
    struct GroupState {
        Color first = 0;
        bool split = false;
        int remaining = 0;
        int size = 0;
    };
    std::vector<std::vector<GroupState>> state(y_copies.size());
    std::vector<std::vector<std::pair<int, int>>> touches(static_cast<std::size_t>(m));
    for (std::size_t y = 0; y < y_copies.size(); ++y) {
        for (std::size_t p = 0; p < groups[y].size(); ++p) {
            GroupState gs;
            gs.size = gs.remaining = static_cast<int>(groups[y][p].size());
            state[y].push_back(gs);
            for (int i : groups[y][p]) touches[i].emplace_back(static_cast<int>(y), static_cast<int>(p));
        }
    }
    auto can_be_bad = [&](std::size_t y) {
        for (const auto& gs : state[y]) {
            if (gs.split) return true;
            if (k >= 2 && gs.size >= 2 && gs.remaining >= 1 && (gs.first != 0 || gs.remaining >= 2)) return true;
        }
        return false;
    };
    for (std::size_t y = 0; y < y_copies.size(); ++y)
        if (!can_be_bad(y)) {
            result.holds = true;
            return result;
        }

    std::vector<Color> colors(static_cast<std::size_t>(m), 0);
    std::vector<int> max_used(patterns.size(), 0);
    unsigned long long nodes = 0;
    auto rec = [&](auto&& self, int i) -> bool {
        if (++nodes > budget) throw BudgetExceeded(nodes);
        if (i == m) return true;
        const auto p = static_cast<std::size_t>(owner[i]);
        const int saved_max = max_used[p];
        for (Color c = 1; c <= std::min(k, saved_max + 1); ++c) {
            colors[i] = c;
            max_used[p] = std::max(saved_max, c);
            std::vector<GroupState> undo;
            for (auto [y, g] : touches[i]) {
                auto& gs = state[y][g];
                undo.push_back(gs);
                --gs.remaining;
                if (gs.first == 0) gs.first = c;
                else if (gs.first != c) gs.split = true;
            }
            bool viable = true;
            for (auto [y, g] : touches[i])
                if (!can_be_bad(static_cast<std::size_t>(y))) viable = false;
            if (viable && self(self, i + 1)) return true;
            for (std::size_t u = 0; u < touches[i].size(); ++u) {
                auto [y, g] = touches[i][u];
                state[y][g] = undo[u];
            }
        }
        colors[i] = 0;
        max_used[p] = saved_max;
        return false;
    };
    const bool found = rec(rec, 0);
    result.colorings_examined = nodes;
    if (found) finish_bad(colors);
    else result.holds = true;
    return result;
}

// ---------------------------------------------------------------------------
// Gadgets and recoloring

enum class GadgetMode { ordered_colored, monotone };

namespace detail {

/// Disjoint union of the items followed by an ordered K_n colored 1..n.
inline OrderedColoredGraph union_with_clique(const std::vector<OrderedColoredGraph>& items, int n) {
    std::vector<Edge> edges;
    std::vector<Color> colors;
    int offset = 0;
    for (const auto& item : items) {
        for (auto [u, v] : item.graph.edges()) edges.emplace_back(u + offset, v + offset);
        colors.insert(colors.end(), item.colors->begin(), item.colors->end());
        offset += item.vertex_count();
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.emplace_back(offset + a, offset + b);
        colors.push_back(a + 1);
    }
    return colored_ordered(Graph::from_edges(offset + n, edges), n, std::move(colors));
}

} // namespace detail

/// Vertex sequence that lists vertices by color, keeping index order inside
/// each color class.
inline std::vector<Vertex> monotone_order(const OrderedColoredGraph& z) {
    if (!z.colors) throw MissingColoring();
    if (!z.ordered) throw NotOrdered();
    std::vector<Vertex> seq(static_cast<std::size_t>(z.vertex_count()));
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return z.color(a) < z.color(b); });
    return seq;
}

/// The unique order that agrees with z's order on every color class and
/// makes the coloring nondecreasing.
inline OrderedColoredGraph monotone_reorder(const OrderedColoredGraph& z) {
    const auto seq = monotone_order(z);
    std::vector<Color> colors;
    for (Vertex v : seq) colors.push_back(z.color(v));
    return colored_ordered(z.graph.reordered(seq), z.n, std::move(colors));
}

inline ExtensionCatalog gadget_catalog(const OrderedColoredGraph& x, int n, GadgetMode mode) {
    return mode == GadgetMode::ordered_colored ? enumerate_extensions_ordered(x, n)
                                               : enumerate_extensions_monotone(x.graph, n);
}

inline OrderedColoredGraph build_gadget_Y(const ExtensionCatalog& catalog, int n, GadgetMode mode) {
    if (catalog.empty()) throw NotNColorable(n);
    auto gadget = detail::union_with_clique(catalog.items(), n);
    return mode == GadgetMode::monotone ? monotone_reorder(gadget) : gadget;
}

/// Disjoint union of every extension of x, then an ordered K_n. In monotone
/// mode x is read as an unordered graph and the union is re-sorted by color.
inline OrderedColoredGraph build_gadget_Y(const OrderedColoredGraph& x, int n, GadgetMode mode) {
    if (mode == GadgetMode::ordered_colored && !x.ordered) throw NotOrdered();
    auto base = x;
    base.colors.reset();
    return build_gadget_Y(gadget_catalog(base, n, mode), n, mode);
}

/// Per color class, how order_b restricted to the class relates to order_a.
enum class OrderRelation { coincide, opposite, neither };

inline std::string_view to_string(OrderRelation r) {
    switch (r) {
    case OrderRelation::coincide: return "coincide";
    case OrderRelation::opposite: return "opposite";
    case OrderRelation::neither: return "neither";
    }
    return "?";
}

/// Orders are vertex sequences from least to greatest. Classes of size one
/// count as coinciding.
inline std::map<Color, OrderRelation> order_relation_per_class(const std::vector<Vertex>& order_a,
                                                               const std::vector<Vertex>& order_b,
                                                               const std::vector<Color>& coloring) {
    auto sorted_a = order_a;
    auto sorted_b = order_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b || std::adjacent_find(sorted_a.begin(), sorted_a.end()) != sorted_a.end())
        throw InvalidInput("orders must list the same vertices once each");
    for (Vertex v : sorted_a)
        if (v < 0 || static_cast<std::size_t>(v) >= coloring.size()) throw VertexOutOfRange(v, static_cast<int>(coloring.size()));

    std::map<Color, std::vector<Vertex>> in_a, in_b;
    for (Vertex v : order_a) in_a[coloring[v]].push_back(v);
    for (Vertex v : order_b) in_b[coloring[v]].push_back(v);
    std::map<Color, OrderRelation> out;
    for (auto& [c, seq_a] : in_a) {
        const auto& seq_b = in_b[c];
        if (seq_a == seq_b) out[c] = OrderRelation::coincide;
        else if (std::equal(seq_a.begin(), seq_a.end(), seq_b.rbegin())) out[c] = OrderRelation::opposite;
        else out[c] = OrderRelation::neither;
    }
    return out;
}

/// True iff every color class is an interval of the order.
inline bool is_convex_classes(const std::vector<Vertex>& order, const std::vector<Color>& coloring) {
    std::set<Color> closed;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Color c = coloring.at(static_cast<std::size_t>(order[i]));
        if (closed.count(c)) return false;
        if (i + 1 < order.size() && coloring.at(static_cast<std::size_t>(order[i + 1])) != c) closed.insert(c);
    }
    return true;
}

namespace detail {

inline bool all_items_embed(const ExtensionCatalog& catalog, const OrderedColoredGraph& host) {
    return std::all_of(catalog.items().begin(), catalog.items().end(),
                       [&](const OrderedColoredGraph& item) { return embeds(item, host); });
}

} // namespace detail

/// Recolors the gadget by every permutation f of [n] (and in monotone mode
/// re-orders it by every choice of keeping or reversing each color class,
/// with classes placed by their new color) and checks that every extension
/// of x still embeds.
inline bool recolor_embed_check(const OrderedColoredGraph& x, int n, GadgetMode mode) {
    auto base = x;
    base.colors.reset();
    if (mode == GadgetMode::ordered_colored && !base.ordered) throw NotOrdered();
    const auto catalog = gadget_catalog(base, n, mode);
    const auto gadget = build_gadget_Y(catalog, n, mode);

    std::vector<Color> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 1);
    do {
        if (mode == GadgetMode::ordered_colored) {
            std::vector<Color> recolored;
            for (Color c : *gadget.colors) recolored.push_back(f[c - 1]);
            if (!detail::all_items_embed(catalog, colored_ordered(gadget.graph, n, recolored))) return false;
            continue;
        }
        std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < gadget.vertex_count(); ++v) classes[gadget.color(v) - 1].push_back(v);
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            // Place the class recolored i at the i-th block.
            std::vector<Vertex> seq;
            std::vector<Color> colors;
            for (Color target = 1; target <= n; ++target) {
                const auto old = static_cast<std::size_t>(std::find(f.begin(), f.end(), target) - f.begin());
                auto block = classes[old];
                if ((flips >> old) & 1u) std::reverse(block.begin(), block.end());
                seq.insert(seq.end(), block.begin(), block.end());
                colors.insert(colors.end(), block.size(), target);
            }
            const auto reordered = colored_ordered(gadget.graph.reordered(seq), n, std::move(colors));
            if (!detail::all_items_embed(catalog, reordered)) return false;
        }
    } while (std::next_permutation(f.begin(), f.end()));
    return true;
}

// ---------------------------------------------------------------------------
// Extension-type coloring

struct TypedCopies {
    std::vector<Embedding> copies;
    ColoringOfCopies alpha;  // alpha.colors[i] = catalog index of the extension induced on copy i
};

/// Colors each copy of x in the reduct of `host` by the catalog index of the
/// extension that host's coloring (and, in monotone mode, its order) induces
/// on the copy. In ordered_colored mode x is an ordered graph; in monotone
/// mode x is read as unordered and host must be monotone.
inline TypedCopies extension_type_coloring(const OrderedColoredGraph& host, const OrderedColoredGraph& x,
                                           GadgetMode mode) {
    if (!host.colors) throw InvalidExtension("host has no coloring");
    if (!host.ordered) throw InvalidExtension("host is not ordered");
    if (!is_proper_coloring(host)) throw InvalidExtension("host coloring is not proper");
    if (mode == GadgetMode::monotone && !is_monotone(host)) throw InvalidExtension("host is not monotone");
    if (mode == GadgetMode::ordered_colored && !x.ordered) throw NotOrdered();

    auto base = x;
    base.colors.reset();
    base.ordered = mode == GadgetMode::ordered_colored;
    const auto catalog = gadget_catalog(base, host.n, mode);

    OrderedColoredGraph reduct(host.graph, 1, std::nullopt, base.ordered);
    TypedCopies out;
    out.copies = enumerate_copies(base, reduct);
    out.alpha.universe = std::max(1, catalog.size());
    for (const auto& copy : out.copies) {
        // The induced extension lives on the image in host order.
        const auto image = copy.image();
        std::vector<Color> colors;
        for (Vertex v : image) colors.push_back(host.color(v));
        const auto induced = colored_ordered(host.graph.induced(image), host.n, std::move(colors));
        const auto index = catalog.index_of(induced);
        if (!index) throw std::logic_error("induced structure missing from extension catalog");
        out.alpha.colors.push_back(*index);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Empirical degree search

struct DegreeCaps {
    int target_max = 3;  // targets Y range over members with at most this many vertices
    int host_max = 6;    // hosts Z range over members with at most this many vertices
    unsigned long long budget = default_arrow_budget;
};

enum class DegreeStatus { determined, undetermined };

struct DegreeReport {
    DegreeStatus status = DegreeStatus::undetermined;
    int degree = 0;        // meaningful when determined
    int lower_bound = 1;   // certified for every host in the class, not only within caps
    int type_count = 1;    // number of extension types of x
    std::optional<std::string> lower_bound_witness;  // certificate of the Y certifying lower_bound
    std::optional<std::string> unresolved_target;    // certificate of a Y with no host found within caps
    int tested_t = 0;      // the t whose upper-bound search ran out of hosts
    unsigned long long arrow_checks = 0;
};

namespace detail {

/// The enrichments a class member carries in the proof argument: proper
/// colorings (ordered colorable classes), orders with monotone colorings
/// (unordered colorable classes), bare orders (K_n-free), or none.
/// Returns the enriched structures on the same vertex set, in index order.
inline std::vector<OrderedColoredGraph> expansions(const OrderedColoredGraph& s, const ClassSpec& spec) {
    std::vector<OrderedColoredGraph> out;
    switch (spec.kind) {
    case ClassKind::n_colorable_ordered:
    case ClassKind::n_chromatic_ordered:
        for_each_proper_coloring(s.graph, spec.n, false, [&](const std::vector<Color>& c) {
            out.push_back(colored_ordered(s.graph, spec.n, c));
        });
        break;
    case ClassKind::n_colorable:
    case ClassKind::n_chromatic:
    case ClassKind::kn_free: {
        std::vector<Vertex> order(static_cast<std::size_t>(s.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        do {
            const Graph h = s.graph.reordered(order);
            if (spec.kind == ClassKind::kn_free) {
                out.push_back(as_ordered(h));
                continue;
            }
            for_each_proper_coloring(h, spec.n, true, [&](const std::vector<Color>& c) {
                out.push_back(colored_ordered(h, spec.n, c));
            });
        } while (std::next_permutation(order.begin(), order.end()));
        break;
    }
    case ClassKind::colored_ordered:
    case ClassKind::monotone_colored_ordered: out.push_back(s); break;
    }
    return out;
}

inline OrderedColoredGraph normalize_for_class(OrderedColoredGraph s, const ClassSpec& spec) {
    s.ordered = is_ordered_kind(spec.kind);
    if (!is_colored_kind(spec.kind)) {
        s.colors.reset();
        s.n = 1;
    }
    return s;
}

} // namespace detail

/// Smallest t such that every class member Y within caps has a class member Z
/// within caps with Z -> (Y)^x_{k,t}. Lower bounds come from the
/// extension-type coloring and hold for all hosts; upper bounds only from
/// hosts found within caps, so a missing host yields UNDETERMINED instead of
/// a false bound.
inline DegreeReport empirical_degree(const OrderedColoredGraph& x_in, const ClassSpec& spec, int k,
                                     const DegreeCaps& caps = {}) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    const auto x = detail::normalize_for_class(x_in, spec);
    if (!is_member(x, spec)) throw InvalidInput("pattern is not a member of the class");
    check_cap(x.vertex_count(), 3);
    check_cap(caps.host_max, is_colored_kind(spec.kind) ? max_colored_enumeration
                             : is_ordered_kind(spec.kind) ? max_ordered_enumeration
                                                          : max_unordered_enumeration);

    const auto targets = enumerate_members(spec, caps.target_max);
    const auto hosts = enumerate_members(spec, caps.host_max);

    // Extension types of x.
    std::set<OrderedKey> types;
    for (const auto& e : detail::expansions(x, spec)) types.insert(ordered_key(e));
    DegreeReport report;
    report.type_count = static_cast<int>(types.size());

    // Lower bound: an expansion-type coloring of any host forces every copy
    // of Y to show all the types Y realizes under its induced expansion.
    const auto type_count = static_cast<int>(types.size());
    for (const auto& member : targets) {
        const auto& y = member.structure;
        bool universal = true;
        int min_realized = type_count;
        for (const auto& e : detail::expansions(y, spec)) {
            std::set<OrderedKey> realized;
            OrderedColoredGraph reduct(e.graph, e.n, is_colored_kind(spec.kind) ? e.colors : std::nullopt,
                                       x.ordered);
            for (const auto& copy : enumerate_copies(x, reduct)) {
                const auto image = copy.image();
                OrderedColoredGraph induced(e.graph.induced(image), e.n, std::nullopt, true);
                if (e.colors) {
                    std::vector<Color> c;
                    for (Vertex v : image) c.push_back(e.color(v));
                    induced.colors = std::move(c);
                }
                realized.insert(ordered_key(induced));
            }
            min_realized = std::min(min_realized, static_cast<int>(realized.size()));
            universal = universal && static_cast<int>(realized.size()) == type_count;
        }
        const int bound = universal ? std::min(k, type_count) : (k >= type_count ? min_realized : 1);
        if (bound > report.lower_bound) {
            report.lower_bound = bound;
            report.lower_bound_witness = member.certificate;
        }
    }

    for (int t = report.lower_bound; t <= k; ++t) {
        if (t == k) {
            // Z = Y witnesses t = k: no more than k colors ever appear.
            report.status = DegreeStatus::determined;
            report.degree = k;
            return report;
        }
        bool all_found = true;
        for (const auto& member : targets) {
            bool found = false;
            for (const auto& host : hosts) {
                if (host.structure.vertex_count() < member.structure.vertex_count()) continue;
                ++report.arrow_checks;
                ArrowQuery q{host.structure, member.structure, x, k, t};
                if (arrow_check(q, caps.budget).holds) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                all_found = false;
                report.unresolved_target = member.certificate;
                break;
            }
        }
        if (all_found) {
            report.status = DegreeStatus::determined;
            report.degree = t;
            return report;
        }
        report.status = DegreeStatus::undetermined;
        report.tested_t = t;
        return report;
    }
    return report;
}

} // namespace ramsey

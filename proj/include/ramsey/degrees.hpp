#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "classes.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace ramsey {

inline constexpr int default_extension_cap = 10;
inline constexpr int default_monotone_cap = 8;

/// Identifies an ordered colored structure up to ordered isomorphism and
/// gives catalogs their index order.
struct OrderedKey {
    std::string adjacency;
    std::vector<Color> colors;

    friend auto operator<=>(const OrderedKey&, const OrderedKey&) = default;
};

inline OrderedKey ordered_key(const OrderedColoredGraph& g) {
    return {adjacency_bits(g.graph), g.colors.value_or(std::vector<Color>{})};
}

/// Pairwise non-isomorphic extensions X̂_1..X̂_t of a base structure, indexed
/// from 1 in increasing key order.
class ExtensionCatalog {
public:
    ExtensionCatalog(OrderedColoredGraph base, ClassSpec target, std::vector<OrderedColoredGraph> items)
        : base_(std::move(base)), target_(target), items_(std::move(items)) {
        for (std::size_t i = 0; i < items_.size(); ++i)
            index_.emplace(ordered_key(items_[i]), static_cast<int>(i) + 1);
    }

    const OrderedColoredGraph& base() const noexcept { return base_; }
    const ClassSpec& target() const noexcept { return target_; }
    const std::vector<OrderedColoredGraph>& items() const noexcept { return items_; }
    int size() const noexcept { return static_cast<int>(items_.size()); }
    bool empty() const noexcept { return items_.empty(); }

    /// 1-based position of the item equal to `ext`, if any.
    std::optional<int> index_of(const OrderedColoredGraph& ext) const {
        auto it = index_.find(ordered_key(ext));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const OrderedColoredGraph& item(int index) const { return items_.at(static_cast<std::size_t>(index - 1)); }

private:
    OrderedColoredGraph base_;
    ClassSpec target_;
    std::vector<OrderedColoredGraph> items_;
    std::map<OrderedKey, int> index_;
};

/// Extensions of an ordered graph in the class of ordered properly
/// [n]-colored graphs. The only order-preserving self-map of a chain is the
/// identity, so distinct colorings are distinct extensions.
inline ExtensionCatalog enumerate_extensions_ordered(const OrderedColoredGraph& x, int n,
                                                     int cap = default_extension_cap) {
    if (!x.ordered) throw NotOrdered();
    if (x.colors) throw InvalidInput("base structure must be uncolored");
    if (n < 1) throw InvalidInput("n must be positive");
    check_cap(x.vertex_count(), cap);
    std::vector<OrderedColoredGraph> items;
    for_each_proper_coloring(x.graph, n, false, [&](const std::vector<Color>& colors) {
        items.push_back(colored_ordered(x.graph, n, colors));
    });
    if (items.empty())
        warn("structure is not " + std::to_string(n) + "-colorable; it has no extensions");
    return ExtensionCatalog(x, {ClassKind::colored_ordered, n}, std::move(items));
}

inline ExtensionCatalog enumerate_extensions_ordered(const Graph& x, int n, int cap = default_extension_cap) {
    return enumerate_extensions_ordered(as_ordered(x), n, cap);
}

inline std::uint64_t sigma(const OrderedColoredGraph& x, int n, int cap = default_extension_cap) {
    return static_cast<std::uint64_t>(enumerate_extensions_ordered(x, n, cap).size());
}

inline std::uint64_t sigma(const Graph& x, int n, int cap = default_extension_cap) {
    return sigma(as_ordered(x), n, cap);
}

/// Extensions of an unordered graph in the class of monotone ordered
/// properly [n]-colored graphs: every vertex order paired with every
/// nondecreasing proper coloring, deduplicated by ordered isomorphism.
inline ExtensionCatalog enumerate_extensions_monotone(const Graph& x, int n, int cap = default_monotone_cap) {
    if (n < 1) throw InvalidInput("n must be positive");
    check_cap(x.vertex_count(), cap);
    std::vector<Vertex> order(static_cast<std::size_t>(x.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::set<std::string> seen_orders;
    std::map<OrderedKey, OrderedColoredGraph> found;
    do {
        const Graph h = x.reordered(order);
        if (!seen_orders.insert(adjacency_bits(h)).second) continue;
        for_each_proper_coloring(h, n, true, [&](const std::vector<Color>& colors) {
            auto item = colored_ordered(h, n, colors);
            found.emplace(ordered_key(item), std::move(item));
        });
    } while (std::next_permutation(order.begin(), order.end()));

    if (found.empty())
        warn("structure is not " + std::to_string(n) + "-colorable; it has no extensions");
    std::vector<OrderedColoredGraph> items;
    for (auto& [key, item] : found) items.push_back(std::move(item));
    return ExtensionCatalog(OrderedColoredGraph(x, 1, std::nullopt, false),
                            {ClassKind::monotone_colored_ordered, n}, std::move(items));
}

inline std::uint64_t tau(const Graph& x, int n, int cap = default_monotone_cap) {
    return static_cast<std::uint64_t>(enumerate_extensions_monotone(x, n, cap).size());
}

namespace detail {

/// Number of nondecreasing proper colorings c of positions 0..v-1, where
/// position i holds vertex order[i], such that c is constant on each pair
/// of positions linked by `partner` (partner[i] = position of g(order[i])).
inline std::uint64_t count_fixed_colorings(const Graph& x, const std::vector<Vertex>& order,
                                           const std::vector<int>& partner, int n) {
    const int v = x.vertex_count();
    std::vector<Color> c(static_cast<std::size_t>(v), 0);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == v) {
            for (int i = 0; i < v; ++i)
                if (c[i] != c[partner[i]]) return;
            ++count;
            return;
        }
        for (Color k = at > 0 ? c[at - 1] : 1; k <= n; ++k) {
            bool clash = false;
            for (int i = 0; i < at && !clash; ++i) clash = c[i] == k && x.adjacent(order[i], order[at]);
            if (clash) continue;
            c[at] = k;
            self(self, at + 1);
        }
        c[at] = 0;
    };
    rec(rec, 0);
    return count;
}

} // namespace detail

/// Orbit count of labeled (order, monotone proper coloring) pairs under
/// Aut(x): the average over automorphisms g of the number of pairs g fixes.
/// g acts by (order, λ) -> (g∘order, λ∘g⁻¹).
inline std::uint64_t tau_burnside(const Graph& x, int n, int cap = default_automorphism_listing_cap) {
    if (n < 1) throw InvalidInput("n must be positive");
    check_cap(x.vertex_count(), cap);
    const int v = x.vertex_count();
    const auto group = list_automorphisms(x);
    std::uint64_t fixed_total = 0;
    std::vector<Vertex> order(static_cast<std::size_t>(v));
    for (const auto& g : group) {
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> position(static_cast<std::size_t>(v));
            for (int i = 0; i < v; ++i) position[order[i]] = i;
            bool order_fixed = true;
            std::vector<int> partner(static_cast<std::size_t>(v));
            for (int i = 0; i < v; ++i) {
                partner[i] = position[g[order[i]]];
                order_fixed = order_fixed && g[order[i]] == order[i];
            }
            if (!order_fixed) continue;
            fixed_total += detail::count_fixed_colorings(x, order, partner, n);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    const auto group_order = static_cast<std::uint64_t>(group.size());
    if (fixed_total % group_order != 0)
        throw std::logic_error("orbit count is not integral; automorphism listing is inconsistent");
    return fixed_total / group_order;
}

/// |X|! / |Aut(X)|: the number of vertex orderings of x up to automorphism.
inline std::uint64_t aut_degree(const Graph& x, int cap = default_canonical_cap) {
    const auto group = automorphism_group(x, cap, 0);
    return factorial(x.vertex_count()) / group.order;
}

// ---------------------------------------------------------------------------
// Closed forms for complete graphs and complete multipartite graphs

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

struct ElementaryRow {
    int n = 0;
    int m = 0;  // number of parts
    int l = 0;  // part size; l == 1 is K_m
    std::uint64_t sigma_closed = 0;      // C(n,m) (lm)!
    std::uint64_t sigma_enumerated = 0;
    std::uint64_t tau_closed = 0;        // C(n,m)
    std::uint64_t tau_enumerated = 0;

    bool sigma_discrepancy() const { return sigma_closed != sigma_enumerated; }
    bool tau_discrepancy() const { return tau_closed != tau_enumerated; }

    std::string family() const {
        if (l == 1) return "K" + std::to_string(m);
        std::string s = "K";
        for (int i = 0; i < m; ++i) s += (i ? "," : "{") + std::to_string(l);
        return s + "}";
    }
};

/// Closed-form values beside enumerated ones for K_m and complete m-partite
/// graphs with parts of size l (1 <= m <= min(n, max_m), 1 <= l <= max_l).
/// The enumerated columns are authoritative; mismatches are reported, not
/// reconciled.
inline std::vector<ElementaryRow> elementary_report(int n, int max_m, int max_l) {
    if (n < 1 || max_m < 1 || max_l < 1) throw InvalidInput("report parameters must be positive");
    std::vector<ElementaryRow> rows;
    for (int m = 1; m <= std::min(n, max_m); ++m) {
        for (int l = 1; l <= max_l; ++l) {
            const Graph x = complete_multipartite(m, l);
            ElementaryRow row;
            row.n = n;
            row.m = m;
            row.l = l;
            row.sigma_closed = binomial(n, m) * factorial(l * m);
            row.sigma_enumerated = sigma(x, n);
            row.tau_closed = binomial(n, m);
            row.tau_enumerated = tau(x, n);
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace ramsey

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace ramsey {

using Permutation = std::vector<Vertex>;  // image[v]

inline constexpr int default_canonical_cap = 10;
inline constexpr int default_automorphism_listing_cap = 8;

/// Upper-triangle adjacency bits in column order x(0,1) x(0,2) x(1,2) x(0,3) ...
/// as a string of '0'/'1'. This is the bit order graph6 packs.
inline std::string adjacency_bits(const Graph& g) {
    std::string bits;
    const int n = g.vertex_count();
    bits.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    return bits;
}

struct CanonicalForm {
    Permutation relabeling;   // relabeling[v] = canonical label of v
    std::string certificate;  // adjacency_bits of the relabeled graph

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

/// Iterated degree refinement (1-dimensional Weisfeiler-Leman) starting from
/// the unit partition. Returns a cell id per vertex; ids are invariant under
/// relabeling.
inline std::vector<int> refine_cells(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> cell(static_cast<std::size_t>(n), 0);
    int cells = n > 0 ? 1 : 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> counts(static_cast<std::size_t>(cells), 0);
            for (Vertex w = 0; w < n; ++w)
                if (g.adjacent(v, w)) ++counts[static_cast<std::size_t>(cell[w])];
            sig[v] = {cell[v], std::move(counts)};
            ids.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        std::vector<int> refined(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) refined[v] = ids[sig[v]];
        if (next == cells) return refined;
        cell = std::move(refined);
        cells = next;
    }
}

/// Branch-and-bound search for the lexicographically least adjacency string.
///
/// Vertices are placed at canonical positions 0, 1, 2, ... Placing a vertex at
/// position p fixes column p of the certificate (its adjacency to positions
/// 0..p-1). Columns are compared in order, so only candidates attaining the
/// least column can lead to the minimum. Twins (vertices u, w with
/// N(u)-w = N(w)-u) are interchangeable by an automorphism fixing every other
/// vertex, so only one twin per tie group is explored.
class LexMinSearch {
public:
    explicit LexMinSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
        const auto cells = refine_cells(g);
        std::vector<int> cell_size(static_cast<std::size_t>(n_) + 1, 0);
        for (int c : cells) ++cell_size[static_cast<std::size_t>(c)];
        preference_.resize(static_cast<std::size_t>(n_));
        std::iota(preference_.begin(), preference_.end(), 0);
        std::stable_sort(preference_.begin(), preference_.end(), [&](Vertex a, Vertex b) {
            return cell_size[cells[a]] < cell_size[cells[b]];
        });
        for (Vertex v = 0; v < n_; ++v) mask_.push_back(g.neighbor_mask(v));
    }

    CanonicalForm run() {
        placed_.clear();
        columns_.assign(static_cast<std::size_t>(n_), 0);
        best_columns_.clear();
        search(0, 0, false);
        CanonicalForm cf;
        cf.relabeling.assign(static_cast<std::size_t>(n_), 0);
        for (int p = 0; p < n_; ++p) cf.relabeling[best_order_[p]] = p;
        cf.certificate = adjacency_bits(g_.permuted(cf.relabeling));
        return cf;
    }

private:
    // Column p as an integer whose most significant bit is adjacency to position 0.
    std::uint64_t column(Vertex v) const {
        std::uint64_t key = 0;
        for (Vertex u : placed_) key = (key << 1) | ((mask_[u] >> v) & 1u);
        return key;
    }

    bool twins(Vertex u, Vertex w) const {
        const std::uint64_t bu = std::uint64_t{1} << u;
        const std::uint64_t bw = std::uint64_t{1} << w;
        return (mask_[u] & ~bw) == (mask_[w] & ~bu);
    }

    void search(int p, std::uint64_t used, bool strictly_less) {
        if (p == n_) {
            if (strictly_less || best_columns_.empty()) {
                best_columns_ = columns_;
                best_order_ = placed_;
                ++best_updates_;
            }
            return;
        }
        std::uint64_t least = ~std::uint64_t{0};
        for (Vertex v : preference_)
            if (!((used >> v) & 1u)) least = std::min(least, column(v));

        bool less_here = strictly_less;
        if (!strictly_less && !best_columns_.empty()) {
            if (least > best_columns_[p]) return;
            less_here = least < best_columns_[p];
        }

        std::vector<Vertex> explored;
        for (Vertex v : preference_) {
            if ((used >> v) & 1u) continue;
            if (column(v) != least) continue;
            if (std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return twins(u, v); }))
                continue;
            explored.push_back(v);
            placed_.push_back(v);
            columns_[p] = least;
            const auto updates = best_updates_;
            search(p + 1, used | (std::uint64_t{1} << v), less_here);
            placed_.pop_back();
            // A new best found below shares this prefix.
            if (best_updates_ != updates) less_here = false;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint64_t> mask_;
    std::vector<Vertex> preference_;
    std::vector<Vertex> placed_;
    std::vector<std::uint64_t> columns_;
    std::vector<std::uint64_t> best_columns_;
    std::vector<Vertex> best_order_;
    unsigned long long best_updates_ = 0;
};

} // namespace detail

/// Canonical relabeling whose certificate is the lexicographically least
/// adjacency string over all vertex permutations.
inline CanonicalForm canonical_form(const Graph& g, int cap = default_canonical_cap) {
    check_cap(g.vertex_count(), std::min(cap, 64));
    return detail::LexMinSearch(g).run();
}

inline Graph canonical_graph(const Graph& g, int cap = default_canonical_cap) {
    return g.permuted(canonical_form(g, cap).relabeling);
}

inline bool are_isomorphic(const Graph& a, const Graph& b, int cap = default_canonical_cap) {
    if (a.vertex_count() != b.vertex_count()) {
        check_cap(a.vertex_count(), cap);
        check_cap(b.vertex_count(), cap);
        return false;
    }
    if (a.edge_count() != b.edge_count()) {
        check_cap(a.vertex_count(), cap);
        return false;
    }
    return canonical_form(a, cap).certificate == canonical_form(b, cap).certificate;
}

// ---------------------------------------------------------------------------
// Automorphisms

struct AutGroup {
    std::uint64_t order = 1;
    std::vector<Permutation> generators;             // strong generating set
    std::optional<std::vector<Permutation>> elements;  // present up to the listing cap
};

namespace detail {

/// Backtracking over vertex images in index order. Calls visit(image) for
/// each automorphism that agrees with `prescribed` (-1 = free); stops early
/// when visit returns false.
template <class Visit>
bool for_each_automorphism(const Graph& g, const std::vector<Vertex>& prescribed, Visit&& visit) {
    const int n = g.vertex_count();
    std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

    auto consistent = [&](Vertex v, Vertex w) {
        if (used[w] || deg[v] != deg[w]) return false;
        for (Vertex u = 0; u < v; ++u)
            if (g.adjacent(u, v) != g.adjacent(image[u], w)) return false;
        return true;
    };

    // Returns false when the visitor asked to stop.
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n) return visit(image);
        auto attempt = [&](Vertex w) -> bool {
            if (!consistent(v, w)) return true;
            image[v] = w;
            used[w] = 1;
            const bool go_on = self(self, v + 1);
            used[w] = 0;
            image[v] = -1;
            return go_on;
        };
        if (prescribed[v] >= 0) return attempt(prescribed[v]);
        for (Vertex w = 0; w < n; ++w)
            if (!attempt(w)) return false;
        return true;
    };
    return rec(rec, 0);
}

} // namespace detail

inline std::vector<Permutation> list_automorphisms(const Graph& g) {
    std::vector<Permutation> out;
    detail::for_each_automorphism(g, std::vector<Vertex>(static_cast<std::size_t>(g.vertex_count()), -1),
                                  [&](const std::vector<Vertex>& image) {
                                      out.push_back(image);
                                      return true;
                                  });
    return out;
}

/// Group order from a stabilizer chain: |Aut| is the product over i of the
/// orbit size of vertex i under the pointwise stabilizer of 0..i-1. The coset
/// representatives found on the way form a strong generating set.
inline AutGroup automorphism_group(const Graph& g, int cap = default_canonical_cap,
                                   int listing_cap = default_automorphism_listing_cap) {
    const int n = g.vertex_count();
    check_cap(n, cap);
    AutGroup group;
    std::vector<Vertex> prescribed(static_cast<std::size_t>(n), -1);
    for (Vertex i = 0; i < n; ++i) {
        std::uint64_t orbit = 1;
        for (Vertex w = i + 1; w < n; ++w) {
            prescribed[i] = w;
            std::optional<Permutation> rep;
            detail::for_each_automorphism(g, prescribed, [&](const std::vector<Vertex>& image) {
                rep = image;
                return false;
            });
            if (rep) {
                ++orbit;
                group.generators.push_back(std::move(*rep));
            }
        }
        prescribed[i] = i;
        group.order *= orbit;
    }
    if (n <= listing_cap) group.elements = list_automorphisms(g);
    return group;
}

inline std::uint64_t factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// ---------------------------------------------------------------------------
// Ordered structures

/// Key that identifies an ordered (optionally colored) structure up to
/// ordered isomorphism: adjacency bits in index order plus the color sequence.
inline std::string ordered_certificate(const OrderedColoredGraph& g) {
    std::string key = adjacency_bits(g.graph);
    if (g.colors) {
        key.push_back('|');
        for (std::size_t i = 0; i < g.colors->size(); ++i) {
            if (i) key.push_back(',');
            key += std::to_string((*g.colors)[i]);
        }
    }
    return key;
}

/// Order-preserving bijections between finite chains are unique, so ordered
/// isomorphism is componentwise equality of the normalized structures.
inline bool ordered_colored_isomorphic(const OrderedColoredGraph& a, const OrderedColoredGraph& b) {
    if (!a.ordered || !b.ordered) throw NotOrdered();
    if (a.n != b.n) {
        warn("comparing structures over different color universes (" + std::to_string(a.n) +
             " vs " + std::to_string(b.n) + "); treated as non-isomorphic");
        return false;
    }
    return a.graph == b.graph && a.colors == b.colors;
}

} // namespace ramsey

#include <random>
#include <set>

#include <gtest/gtest.h>

#include <ramsey/arrows.hpp>

#include "oracles.hpp"

using namespace ramsey;

namespace {

OrderedColoredGraph plain(const Graph& g) { return OrderedColoredGraph(g, 1, std::nullopt, false); }

std::set<std::vector<Vertex>> images(const std::vector<Embedding>& copies) {
    std::set<std::vector<Vertex>> out;
    for (const auto& c : copies) out.insert(c.image());
    return out;
}

}  // namespace

TEST(Copies, MatchBruteForce) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto host = oracle::random_graph(3 + trial % 5, 0.5, rng);
        const auto pattern = oracle::random_graph(1 + trial % 3, 0.5, rng);
        const auto unordered = enumerate_copies(plain(pattern), plain(host));
        EXPECT_EQ(images(unordered), oracle::copies(pattern, host, false));
        EXPECT_EQ(unordered.size(), images(unordered).size());
        const auto ordered = enumerate_copies(as_ordered(pattern), as_ordered(host));
        EXPECT_EQ(images(ordered), oracle::copies(pattern, host, true));
    }
}

TEST(Copies, CountsOnKnownGraphs) {
    EXPECT_EQ(enumerate_copies(plain(complete_graph(3)), plain(complete_graph(6))).size(), 20u);
    EXPECT_EQ(count_embeddings(plain(complete_graph(3)), plain(complete_graph(6))), 120u);
    EXPECT_EQ(enumerate_copies(plain(path_graph(3)), plain(cycle_graph(5))).size(), 5u);
    EXPECT_TRUE(embeds(plain(Graph(2)), plain(cycle_graph(5))));
    EXPECT_FALSE(embeds(plain(complete_graph(3)), plain(cycle_graph(5))));
    EXPECT_THROW(enumerate_copies(as_ordered(Graph(1)), plain(Graph(2))), InvalidInput);
}

TEST(Copies, ColoredCopiesRespectColors) {
    const auto host = colored_ordered(path_graph(4), 2, {1, 2, 1, 2});
    const auto pattern = colored_ordered(complete_graph(2), 2, {2, 1});
    const auto copies = enumerate_copies(pattern, host);
    ASSERT_EQ(copies.size(), 1u);
    EXPECT_EQ(copies[0].map, (std::vector<Vertex>{1, 2}));
}

TEST(Arrow, ClassicalRamseyFacts) {
    const ArrowQuery yes{plain(complete_graph(6)), plain(complete_graph(3)), plain(complete_graph(2)), 2, 1};
    EXPECT_TRUE(arrow_check(yes).holds);
    const ArrowQuery no{plain(complete_graph(5)), plain(complete_graph(3)), plain(complete_graph(2)), 2, 1};
    const auto r = arrow_check(no);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.bad_coloring.has_value());
    EXPECT_TRUE(is_bad_coloring(no, *r.bad_coloring));
}

TEST(Arrow, MatchesExhaustiveSearch) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const auto z = oracle::random_graph(4 + trial % 3, 0.6, rng);
        const auto y = oracle::random_graph(3, 0.6, rng);
        const auto x = oracle::random_graph(2, 0.5, rng);
        for (int t = 1; t <= 2; ++t) {
            const ArrowQuery q{plain(z), plain(y), plain(x), 2, t};
            const auto r = arrow_check(q);
            EXPECT_EQ(r.holds, oracle::arrow_holds(z, y, x, 2, t));
            if (!r.holds) {
                EXPECT_TRUE(is_bad_coloring(q, *r.bad_coloring));
            }
        }
    }
}

TEST(Arrow, MonotoneInT) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const auto z = oracle::random_graph(5, 0.5, rng);
        const auto y = oracle::random_graph(3, 0.5, rng);
        bool previous = false;
        for (int t = 1; t <= 3; ++t) {
            const bool holds = arrow_check({plain(z), plain(y), plain(Graph(2)), 3, t}).holds;
            if (previous) {
                EXPECT_TRUE(holds);
            }
            previous = holds;
        }
    }
}

TEST(Arrow, ValidatesArguments) {
    const auto k3 = plain(complete_graph(3));
    EXPECT_THROW(arrow_check({k3, k3, k3, 0, 1}), InvalidInput);
    EXPECT_THROW(arrow_check({k3, k3, k3, 2, 0}), InvalidInput);
    EXPECT_THROW(arrow_check({plain(complete_graph(6)), plain(complete_graph(3)), plain(complete_graph(2)), 2, 1}, 5),
                 BudgetExceeded);
}

TEST(Arrow, TargetMissingFromHostFails) {
    const auto r = arrow_check({plain(cycle_graph(5)), plain(complete_graph(3)), plain(complete_graph(2)), 2, 1});
    EXPECT_FALSE(r.holds);
}

TEST(SimultaneousArrow, AgreesWithSinglePattern) {
    const auto k6 = plain(complete_graph(6));
    const auto k5 = plain(complete_graph(5));
    const auto k3 = plain(complete_graph(3));
    const auto k2 = plain(complete_graph(2));
    EXPECT_TRUE(simultaneous_arrow_check(k6, k3, {k2}, 2).holds);
    const auto r = simultaneous_arrow_check(k5, k3, {k2}, 2);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.bad_coloring.has_value());
    EXPECT_TRUE(is_bad_coloring({k5, k3, k2, 2, 1}, r.bad_coloring->front()));
    // With vertices as a second pattern, two colors fail: split the vertices
    // 3/3 and avoid a monochromatic edge triangle inside each half.
    EXPECT_TRUE(simultaneous_arrow_check(k6, k3, {k2, plain(Graph(1))}, 1).holds);
    EXPECT_FALSE(simultaneous_arrow_check(k6, k3, {k2, plain(Graph(1))}, 2).holds);
}

// ---------------------------------------------------------------------------
// Gadgets and orders

TEST(Reorder, MonotoneIdempotentAndClassPreserving) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int v = static_cast<int>(rng() % 9);
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<Color> colors(static_cast<std::size_t>(v));
        for (auto& c : colors) c = 1 + static_cast<Color>(rng() % n);
        std::bernoulli_distribution coin(0.5);
        const auto g = Graph::from_predicate(v, [&](Vertex a, Vertex b) { return colors[a] != colors[b] && coin(rng); });
        const auto z = colored_ordered(g, n, colors);
        const auto r = monotone_reorder(z);
        EXPECT_TRUE(is_monotone(r));
        EXPECT_TRUE(is_proper_coloring(r));
        EXPECT_EQ(monotone_reorder(r), r);
        const auto seq = monotone_order(z);
        std::vector<Vertex> identity(seq.size());
        std::iota(identity.begin(), identity.end(), 0);
        for (const auto& [c, rel] : order_relation_per_class(identity, seq, colors))
            EXPECT_EQ(rel, OrderRelation::coincide);
        EXPECT_TRUE(is_convex_classes(seq, colors));
    }
}

TEST(Orders, Relations) {
    const std::vector<Color> coloring{1, 1, 1, 2, 2};
    const auto rel = order_relation_per_class({0, 1, 2, 3, 4}, {2, 4, 1, 3, 0}, coloring);
    EXPECT_EQ(rel.at(1), OrderRelation::opposite);
    EXPECT_EQ(rel.at(2), OrderRelation::opposite);
    const auto rel2 = order_relation_per_class({0, 1, 2, 3, 4}, {1, 0, 2, 3, 4}, coloring);
    EXPECT_EQ(rel2.at(1), OrderRelation::neither);
    EXPECT_EQ(rel2.at(2), OrderRelation::coincide);
    EXPECT_THROW(order_relation_per_class({0, 1}, {0, 2}, {1, 1, 1}), InvalidInput);
    EXPECT_TRUE(is_convex_classes({0, 1, 2, 3, 4}, coloring));
    EXPECT_FALSE(is_convex_classes({0, 3, 1, 2, 4}, coloring));
}

TEST(Gadget, ContainsEveryExtensionAndClique) {
    for (int n = 1; n <= 3; ++n) {
        const auto x = as_ordered(path_graph(3));
        if (!is_k_colorable(x.graph, n)) continue;
        const auto cat = enumerate_extensions_ordered(x, n);
        const auto y = build_gadget_Y(x, n, GadgetMode::ordered_colored);
        EXPECT_EQ(y.vertex_count(), cat.size() * 3 + n);
        for (const auto& item : cat.items()) EXPECT_TRUE(embeds(item, y));
        EXPECT_TRUE(contains_clique(y.graph, n));
        const auto m = build_gadget_Y(x, n, GadgetMode::monotone);
        EXPECT_TRUE(is_monotone(m));
    }
    EXPECT_THROW(build_gadget_Y(as_ordered(complete_graph(3)), 2, GadgetMode::ordered_colored), NotNColorable);
}

TEST(Gadget, RecolorEmbedCheckSmallPatterns) {
    for (int v = 1; v <= 3; ++v)
        for_each_labeled_graph(v, [&](const Graph& g) {
            for (int n = 1; n <= 3; ++n) {
                if (!is_k_colorable(g, n)) continue;
                EXPECT_TRUE(recolor_embed_check(as_ordered(g), n, GadgetMode::ordered_colored));
                EXPECT_TRUE(recolor_embed_check(as_ordered(g), n, GadgetMode::monotone));
            }
        });
}

TEST(ExtensionType, RangeIsTheCatalog) {
    // Host: ordered 2-colored path 1-2-1-2; x = ordered K1.
    const auto host = colored_ordered(path_graph(4), 2, {1, 2, 1, 2});
    const auto typed = extension_type_coloring(host, as_ordered(Graph(1)), GadgetMode::ordered_colored);
    ASSERT_EQ(typed.copies.size(), 4u);
    EXPECT_EQ(typed.alpha.colors, (std::vector<Color>{1, 2, 1, 2}));
    EXPECT_EQ(typed.alpha.universe, 2);
}

TEST(ExtensionType, PermutationConsistency) {
    // Swapping the two colors of the host swaps the type of every copy of K1.
    const auto host = colored_ordered(path_graph(4), 2, {1, 2, 1, 2});
    const auto swapped = colored_ordered(path_graph(4), 2, {2, 1, 2, 1});
    const auto a = extension_type_coloring(host, as_ordered(Graph(1)), GadgetMode::ordered_colored);
    const auto b = extension_type_coloring(swapped, as_ordered(Graph(1)), GadgetMode::ordered_colored);
    for (std::size_t i = 0; i < a.alpha.colors.size(); ++i) EXPECT_EQ(a.alpha.colors[i] + b.alpha.colors[i], 3);
}

TEST(ExtensionType, RejectsBadHosts) {
    const auto x = as_ordered(Graph(1));
    EXPECT_THROW(extension_type_coloring(as_ordered(path_graph(2)), x, GadgetMode::ordered_colored), InvalidExtension);
    EXPECT_THROW(extension_type_coloring(colored_ordered(path_graph(2), 2, {1, 1}), x, GadgetMode::ordered_colored),
                 InvalidExtension);
    EXPECT_THROW(extension_type_coloring(colored_ordered(path_graph(2), 2, {2, 1}), x, GadgetMode::monotone),
                 InvalidExtension);
}

TEST(Degree, SmallCases) {
    const auto k1 = as_ordered(Graph(1));
    const auto r = empirical_degree(k1, {ClassKind::n_colorable_ordered, 2}, 2);
    EXPECT_EQ(r.status, DegreeStatus::determined);
    EXPECT_EQ(r.degree, 2);
    EXPECT_EQ(r.lower_bound, 2);
    EXPECT_EQ(empirical_degree(k1, {ClassKind::n_colorable, 1}, 2).degree, 1);
    const auto k2 = as_ordered(complete_graph(2));
    EXPECT_EQ(empirical_degree(k2, {ClassKind::n_colorable, 2}, 2).degree, 1);
    EXPECT_THROW(empirical_degree(as_ordered(complete_graph(3)), {ClassKind::n_colorable, 2}, 2), InvalidInput);
    EXPECT_THROW(empirical_degree(k1, {ClassKind::n_colorable, 2}, 0), InvalidInput);
}

TEST(Reorder, CopiesOfMonotonePatterns) {
    // Every copy of a monotone pattern in z survives the reordering; a copy
    // in the reordered structure is a copy in z exactly when z's order on its
    // image is already monotone.
    std::mt19937_64 rng(53);
    std::vector<OrderedColoredGraph> patterns;
    for (int v = 1; v <= 3; ++v)
        for (auto& m : enumerate_members({ClassKind::monotone_colored_ordered, 3}, v, v)) patterns.push_back(m.structure);
    for (int trial = 0; trial < 100; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 7);
        std::vector<Color> colors(static_cast<std::size_t>(v));
        for (auto& c : colors) c = 1 + static_cast<Color>(rng() % 3);
        std::bernoulli_distribution coin(0.5);
        const auto g = Graph::from_predicate(v, [&](Vertex a, Vertex b) { return colors[a] != colors[b] && coin(rng); });
        const auto z = colored_ordered(g, 3, colors);
        const auto r = monotone_reorder(z);
        const auto seq = monotone_order(z);
        for (const auto& p : patterns) {
            std::set<std::vector<Vertex>> before = images(enumerate_copies(p, z));
            std::set<std::vector<Vertex>> after_monotone_in_z;
            std::set<std::vector<Vertex>> after;
            for (const auto& c : enumerate_copies(p, r)) {
                std::vector<Vertex> back;
                for (Vertex pos : c.image()) back.push_back(seq[pos]);
                std::sort(back.begin(), back.end());
                after.insert(back);
                std::vector<Color> in_z;
                for (Vertex u : back) in_z.push_back(colors[u]);
                if (std::is_sorted(in_z.begin(), in_z.end())) after_monotone_in_z.insert(back);
            }
            EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
            EXPECT_EQ(before, after_monotone_in_z);
        }
    }
}

TEST(Reorder, CanGainCopies) {
    // a (color 2) before b (color 1), not adjacent: no monotone pair in z,
    // one after reordering.
    const auto z = colored_ordered(Graph(2), 2, {2, 1});
    const auto pattern = colored_ordered(Graph(2), 2, {1, 2});
    EXPECT_EQ(enumerate_copies(pattern, z).size(), 0u);
    EXPECT_EQ(enumerate_copies(pattern, monotone_reorder(z)).size(), 1u);
}

#include <random>
#include <set>

#include <gtest/gtest.h>

#include <ramsey/canonical.hpp>
#include <ramsey/classes.hpp>

#include "oracles.hpp"

using namespace ramsey;

namespace {

std::vector<Graph> test_graphs() {
    std::vector<Graph> gs{Graph(0), Graph(1), complete_graph(5), cycle_graph(6), path_graph(5),
                          complete_multipartite(3, 2), complete_multipartite(2, 3), edgeless_graph(6),
                          disjoint_union(cycle_graph(3), cycle_graph(4))};
    // Petersen graph
    gs.push_back(make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 12; ++i) gs.push_back(oracle::random_graph(4 + i % 5, 0.45, rng));
    return gs;
}

}  // namespace

TEST(Canonical, MatchesBruteForceMinimum) {
    std::mt19937_64 rng(5);
    for (int v = 0; v <= 7; ++v)
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = oracle::random_graph(v, 0.5, rng);
            EXPECT_EQ(canonical_form(g).certificate, oracle::canonical_certificate(g));
        }
}

TEST(Canonical, CertificateIsAdjacencyOfRelabeledGraph) {
    for (const auto& g : test_graphs()) {
        const auto cf = canonical_form(g);
        EXPECT_EQ(adjacency_bits(g.permuted(cf.relabeling)), cf.certificate);
        EXPECT_EQ(canonical_graph(g), g.permuted(cf.relabeling));
    }
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
    std::mt19937_64 rng(17);
    for (const auto& g : test_graphs()) {
        const auto cert = canonical_form(g).certificate;
        for (int i = 0; i < 200; ++i) {
            const auto p = oracle::random_permutation(g.vertex_count(), rng);
            ASSERT_EQ(canonical_form(g.permuted(p)).certificate, cert);
        }
    }
}

TEST(Canonical, IsomorphismIsAnEquivalenceOnSmallGraphs) {
    // Isomorphism by certificate agrees with brute force on all labeled
    // 4-vertex graphs; equality of brute-force minima is an equivalence.
    std::vector<Graph> all;
    for_each_labeled_graph(4, [&](const Graph& g) { all.push_back(g); });
    for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = 0; j < all.size(); j += 5)
            EXPECT_EQ(are_isomorphic(all[i], all[j]),
                      oracle::canonical_certificate(all[i]) == oracle::canonical_certificate(all[j]));
    for (const auto& g : all) EXPECT_TRUE(are_isomorphic(g, g));
}

TEST(Canonical, RespectsCap) {
    EXPECT_THROW(canonical_form(Graph(11)), SizeCapExceeded);
    EXPECT_NO_THROW(canonical_form(Graph(11), 11));
    EXPECT_THROW(are_isomorphic(Graph(11), Graph(12)), SizeCapExceeded);
}

TEST(Automorphisms, KnownOrders) {
    EXPECT_EQ(automorphism_group(Graph(0)).order, 1u);
    EXPECT_EQ(automorphism_group(complete_graph(5)).order, 120u);
    EXPECT_EQ(automorphism_group(cycle_graph(5)).order, 10u);
    EXPECT_EQ(automorphism_group(path_graph(4)).order, 2u);
    EXPECT_EQ(automorphism_group(test_graphs()[9]).order, 120u);  // Petersen
}

TEST(Automorphisms, OrderMatchesBruteForceAndListing) {
    std::mt19937_64 rng(23);
    for (int v = 0; v <= 6; ++v)
        for (int trial = 0; trial < 30; ++trial) {
            const auto g = oracle::random_graph(v, trial % 2 ? 0.3 : 0.6, rng);
            const auto group = automorphism_group(g);
            EXPECT_EQ(group.order, oracle::automorphism_count(g));
            ASSERT_TRUE(group.elements.has_value());
            EXPECT_EQ(group.elements->size(), group.order);
            std::set<Permutation> distinct(group.elements->begin(), group.elements->end());
            EXPECT_EQ(distinct.size(), group.order);
            for (const auto& p : *group.elements) EXPECT_EQ(g.permuted(p), g);
        }
}

TEST(Automorphisms, OrbitStabilizer) {
    // |Aut| = |orbit(v)| * |Stab(v)| for each vertex v.
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(1 + trial % 6, 0.5, rng);
        const auto elements = list_automorphisms(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::set<Vertex> orbit;
            std::size_t stabilizer = 0;
            for (const auto& p : elements) {
                orbit.insert(p[v]);
                stabilizer += p[v] == v;
            }
            EXPECT_EQ(orbit.size() * stabilizer, elements.size());
        }
    }
}

TEST(Automorphisms, ListingCapOmitsElements) {
    const auto group = automorphism_group(complete_graph(9), 10, 8);
    EXPECT_EQ(group.order, 362880u);
    EXPECT_FALSE(group.elements.has_value());
}

TEST(Ordered, IsomorphismIsEquality) {
    const auto a = colored_ordered(path_graph(3), 2, {1, 2, 1});
    auto b = a;
    EXPECT_TRUE(ordered_colored_isomorphic(a, b));
    b = colored_ordered(path_graph(3), 2, {2, 1, 2});
    EXPECT_FALSE(ordered_colored_isomorphic(a, b));
    // Isomorphic as unordered graphs, but not as ordered ones.
    EXPECT_FALSE(ordered_colored_isomorphic(as_ordered(make_graph(3, {{0, 1}})), as_ordered(make_graph(3, {{1, 2}}))));
    auto u = a;
    u.ordered = false;
    EXPECT_THROW(ordered_colored_isomorphic(a, u), NotOrdered);
}

TEST(Ordered, DifferentColorUniversesWarn) {
    std::string seen;
    auto saved = warning_sink();
    warning_sink() = [&](const std::string& msg) { seen = msg; };
    const bool same = ordered_colored_isomorphic(colored_ordered(Graph(1), 2, {1}), colored_ordered(Graph(1), 3, {1}));
    warning_sink() = saved;
    EXPECT_FALSE(same);
    EXPECT_FALSE(seen.empty());
}

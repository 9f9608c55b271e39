#include <random>
#include <set>

#include <gtest/gtest.h>

#include <ramsey/classes.hpp>

#include "oracles.hpp"

using namespace ramsey;

TEST(Chromatic, KnownValues) {
    EXPECT_EQ(chromatic_number(Graph(0)), 0);
    EXPECT_EQ(chromatic_number(Graph(3)), 1);
    EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
    EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
    EXPECT_EQ(chromatic_number(complete_graph(6)), 6);
    EXPECT_EQ(chromatic_number(complete_multipartite(4, 2)), 4);
    EXPECT_THROW(chromatic_number(Graph(13)), SizeCapExceeded);
}

TEST(Chromatic, MatchesExhaustiveSearch) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = oracle::random_graph(trial % 8, 0.5, rng);
        EXPECT_EQ(chromatic_number(g), oracle::chromatic_number(g));
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(is_k_colorable(g, k), oracle::chromatic_number(g) <= k);
    }
}

TEST(ClassKinds, NamesRoundTrip) {
    for (auto kind : {ClassKind::n_colorable, ClassKind::n_colorable_ordered, ClassKind::n_chromatic,
                      ClassKind::n_chromatic_ordered, ClassKind::kn_free, ClassKind::colored_ordered,
                      ClassKind::monotone_colored_ordered})
        EXPECT_EQ(parse_class_kind(to_string(kind)), kind);
    EXPECT_EQ(parse_class_kind("n-colorable"), ClassKind::n_colorable);
    EXPECT_THROW(parse_class_kind("planar"), InvalidInput);
}

TEST(Membership, Uncolored) {
    const auto c5 = cycle_graph(5);
    EXPECT_TRUE(is_member(c5, {ClassKind::n_colorable, 3}));
    EXPECT_FALSE(is_member(c5, {ClassKind::n_colorable, 2}));
    EXPECT_TRUE(is_member(c5, {ClassKind::n_chromatic, 3}));
    EXPECT_FALSE(is_member(c5, {ClassKind::n_chromatic, 4}));
    EXPECT_TRUE(is_member(c5, {ClassKind::kn_free, 3}));
    EXPECT_FALSE(is_member(complete_graph(3), {ClassKind::kn_free, 3}));
}

TEST(Membership, Colored) {
    const auto a = colored_ordered(path_graph(3), 2, {1, 2, 1});
    EXPECT_TRUE(is_member(a, {ClassKind::colored_ordered, 2}));
    EXPECT_FALSE(is_member(a, {ClassKind::monotone_colored_ordered, 2}));
    const auto b = colored_ordered(path_graph(3), 3, {1, 2, 3});
    EXPECT_TRUE(is_member(b, {ClassKind::monotone_colored_ordered, 3}));
    EXPECT_FALSE(is_member(b, {ClassKind::colored_ordered, 2}));  // colors exceed the universe
    EXPECT_FALSE(is_member(as_ordered(path_graph(3)), {ClassKind::colored_ordered, 2}));
}

TEST(Enumeration, GraphCountsUpToSeven) {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int v = 0; v <= 7; ++v) EXPECT_EQ(enumerate_graphs(v).size(), expected[v]) << v;
}

TEST(Enumeration, MatchesBruteForceClassesAndIsJobIndependent) {
    for (int v = 0; v <= 5; ++v) {
        std::set<std::string> brute;
        for_each_labeled_graph(v, [&](const Graph& g) { brute.insert(oracle::canonical_certificate(g)); });
        std::set<std::string> ours;
        for (const auto& g : enumerate_graphs(v)) ours.insert(adjacency_bits(g));
        EXPECT_EQ(ours, brute);
    }
    const auto a = enumerate_members({ClassKind::n_colorable, 3}, 6, 0, 1);
    const auto b = enumerate_members({ClassKind::n_colorable, 3}, 6, 0, 8);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].certificate, b[i].certificate);
}

TEST(Enumeration, MembersBelongAndAreDistinct) {
    for (auto kind : {ClassKind::n_colorable, ClassKind::n_chromatic, ClassKind::kn_free,
                      ClassKind::n_colorable_ordered, ClassKind::colored_ordered,
                      ClassKind::monotone_colored_ordered}) {
        const ClassSpec spec{kind, 2};
        const auto members = enumerate_members(spec, 4);
        std::set<std::string> seen;
        for (const auto& m : members) {
            EXPECT_TRUE(is_member(m.structure, spec));
            EXPECT_TRUE(seen.insert(std::to_string(m.structure.vertex_count()) + ":" + m.certificate).second);
        }
    }
}

TEST(Enumeration, ColoredCountsMatchColoringSums) {
    // Members of the colored class on v vertices = sum over labeled graphs of
    // the number of proper colorings.
    for (int v = 0; v <= 4; ++v) {
        std::uint64_t expected = 0;
        for_each_labeled_graph(v, [&](const Graph& g) { expected += oracle::proper_coloring_count(g, 2); });
        EXPECT_EQ(enumerate_members({ClassKind::colored_ordered, 2}, v, v).size(), expected);
    }
}

TEST(Enumeration, ProperColoringsInLexOrder) {
    std::vector<std::vector<Color>> seen;
    for_each_proper_coloring(path_graph(3), 2, false, [&](const std::vector<Color>& c) { seen.push_back(c); });
    EXPECT_EQ(seen, (std::vector<std::vector<Color>>{{1, 2, 1}, {2, 1, 2}}));
    seen.clear();
    for_each_proper_coloring(Graph(2), 2, true, [&](const std::vector<Color>& c) { seen.push_back(c); });
    EXPECT_EQ(seen, (std::vector<std::vector<Color>>{{1, 1}, {1, 2}, {2, 2}}));
}

TEST(Enumeration, Caps) {
    EXPECT_THROW(enumerate_graphs(8), SizeCapExceeded);
    EXPECT_THROW(enumerate_members({ClassKind::colored_ordered, 2}, 6), SizeCapExceeded);
}

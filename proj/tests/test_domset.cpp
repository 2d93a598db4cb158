#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bipdom/domset.hpp"
#include "bipdom/error.hpp"
#include "bipdom/graph.hpp"
#include "bipdom/graph_io.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace bipdom;
using fixtures::code_of;

namespace {

std::set<oracle::Mask> as_masks(const Graph& g, const std::vector<VertexSet>& sets) {
    std::set<oracle::Mask> out;
    for (const auto& s : sets) {
        oracle::Mask m = 0;
        for (const auto& l : s) m |= oracle::Mask{1} << g.index_of(l);
        out.insert(m);
    }
    return out;
}

} // namespace

TEST(Dominating, PathP3) {
    auto p3 = fixtures::path(3);
    VertexSet center = {"b"}, leaf = {"a"}, ends = {"a", "c"};
    EXPECT_TRUE(is_dominating_set(p3, center));
    EXPECT_FALSE(is_dominating_set(p3, leaf));
    EXPECT_TRUE(is_dominating_set(p3, ends));
    // A total dominating set must dominate its own members.
    EXPECT_FALSE(is_total_dominating_set(p3, center));
    VertexSet ab = {"a", "b"};
    EXPECT_TRUE(is_total_dominating_set(p3, ab));

    auto r = domination_number(p3);
    EXPECT_EQ(r.value, 1u);
    EXPECT_EQ(r.witness, (VertexSet{"b"}));
    EXPECT_EQ(total_domination_number(p3).value, 2u);
}

TEST(Dominating, UnknownLabel) {
    auto p3 = fixtures::path(3);
    VertexSet bad = {"zz"};
    EXPECT_EQ(code_of([&] { is_dominating_set(p3, bad); }), ErrorCode::UnknownVertex);
}

TEST(Dominating, Cycles) {
    auto c6 = fixtures::cycle(6);
    auto g = domination_number(c6);
    EXPECT_EQ(g.value, 2u);
    EXPECT_TRUE(is_dominating_set(c6, g.witness));
    auto t = total_domination_number(c6);
    EXPECT_EQ(t.value, 4u);
    EXPECT_TRUE(is_total_dominating_set(c6, t.witness));
    EXPECT_EQ(domination_number(fixtures::cycle(4)).value, 2u);
}

TEST(Dominating, EdgelessAndStar) {
    auto e3 = fixtures::edgeless(3);
    EXPECT_EQ(domination_number(e3).value, 3u);
    EXPECT_EQ(code_of([&] { total_domination_number(e3); }), ErrorCode::IsolatedVertex);
    EXPECT_EQ(code_of([&] { enumerate_minimum_sets(e3, true); }), ErrorCode::IsolatedVertex);
    EXPECT_EQ(domination_number(fixtures::star3()).witness, (VertexSet{"hub"}));
    EXPECT_EQ(total_domination_number(fixtures::star3()).value, 2u);
}

TEST(Enumerate, SmallGraphs) {
    auto c4 = fixtures::cycle(4);
    // Every pair of vertices of C4 dominates it.
    EXPECT_EQ(enumerate_minimum_sets(c4, false).size(), 6u);

    auto c6 = fixtures::cycle(6);
    EXPECT_EQ(enumerate_minimum_sets(c6, false),
              (std::vector<VertexSet>{{"1", "4"}, {"2", "5"}, {"3", "6"}}));

    EXPECT_EQ(enumerate_minimum_sets(fixtures::path(3), false), (std::vector<VertexSet>{{"b"}}));
    EXPECT_EQ(enumerate_minimum_sets(fixtures::path(3), true),
              (std::vector<VertexSet>{{"a", "b"}, {"b", "c"}}));
}

TEST(Enumerate, Cap) {
    // 2^6 minimum sets: one endpoint of each of six disjoint edges.
    std::vector<Label> v;
    std::vector<std::pair<Label, Label>> e;
    for (int i = 0; i < 6; ++i) {
        v.push_back("a" + std::to_string(i));
        v.push_back("b" + std::to_string(i));
        e.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    }
    auto g = Graph::from_edge_list(v, e);
    EXPECT_EQ(enumerate_minimum_sets(g, false).size(), 64u);
    EXPECT_EQ(code_of([&] { enumerate_minimum_sets(g, false, 10); }), ErrorCode::BudgetExceeded);
}

TEST(Property, MatchesBruteForce) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const double p = 0.15 + 0.1 * (trial % 6);
        auto small = oracle::random_graph(rng, 1, 9, p);
        auto g = oracle::to_graph(small);

        auto r = domination_number(g);
        ASSERT_EQ(static_cast<int>(r.value), *oracle::gamma(small, false)) << write_graph_text(g);
        ASSERT_EQ(r.witness.size(), r.value);
        ASSERT_TRUE(is_dominating_set(g, r.witness));
        const auto standard = oracle::minimum_sets(small, false);
        ASSERT_EQ(as_masks(g, enumerate_minimum_sets(g, false)),
                  std::set<oracle::Mask>(standard.begin(), standard.end()));

        if (oracle::has_isolated(small)) continue;
        auto t = total_domination_number(g);
        ASSERT_EQ(static_cast<int>(t.value), *oracle::gamma(small, true)) << write_graph_text(g);
        ASSERT_TRUE(is_total_dominating_set(g, t.witness));
        const auto expected = oracle::minimum_sets(small, true);
        ASSERT_EQ(as_masks(g, enumerate_minimum_sets(g, true)), std::set<oracle::Mask>(expected.begin(), expected.end()));
    }
}

TEST(Property, TotalBetweenGammaAndTwiceGamma) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto small = oracle::random_graph(rng, 2, 12, 0.3);
        if (oracle::has_isolated(small)) continue;
        auto g = oracle::to_graph(small);
        const auto gamma = domination_number(g).value;
        const auto gamma_t = total_domination_number(g).value;
        EXPECT_LE(gamma, gamma_t);
        EXPECT_LE(gamma_t, 2 * gamma);
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(Property, SingleEdgeMonotonicity) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = oracle::to_graph(oracle::random_graph(rng, 2, 10, 0.35));
        const auto gamma = domination_number(g).value;
        for (const auto& e : g.edges()) {
            std::vector<Edge> one = {e};
            const auto removed = domination_number(remove_edges(g, one)).value;
            EXPECT_GE(removed, gamma);
            EXPECT_LE(removed, gamma + 1);
        }
        for (const auto& e : complement_edges(g)) {
            std::vector<Edge> one = {e};
            const auto added = domination_number(add_edges(g, one)).value;
            EXPECT_LE(added, gamma);
            EXPECT_GE(added + 1, gamma);
        }
    }
}

TEST(Kernel, FindWithinAndDominates) {
    auto c6 = fixtures::cycle(6);
    const auto& adj = c6.adjacency();
    EXPECT_FALSE(find_dominating_set_within(adj, DominationMode::Standard, 1));
    auto two = find_dominating_set_within(adj, DominationMode::Standard, 2);
    ASSERT_TRUE(two);
    EXPECT_TRUE(dominates(adj, DominationMode::Standard, *two));
    EXPECT_FALSE(find_dominating_set_within(adj, DominationMode::Total, 3));
    EXPECT_TRUE(find_dominating_set_within(adj, DominationMode::Total, 4));
    EXPECT_EQ(enumerate_dominating_sets_within(adj, DominationMode::Standard, 2, 100).size(), 3u);
}

TEST(Kernel, GridGraph) {
    // A 40-vertex bipartite grid: branch-and-bound must still return a valid optimum quickly.
    std::vector<Label> v;
    std::vector<std::pair<Label, Label>> e;
    auto name = [](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 8; ++c) {
            v.push_back(name(r, c));
            if (r > 0) e.emplace_back(name(r - 1, c), name(r, c));
            if (c > 0) e.emplace_back(name(r, c - 1), name(r, c));
        }
    auto g = Graph::from_edge_list(v, e);
    auto r = domination_number(g);
    EXPECT_TRUE(is_dominating_set(g, r.witness));
    // Optimum of the 5x8 grid graph, confirmed by an integer program.
    EXPECT_EQ(r.value, 11u);
    EXPECT_FALSE(find_dominating_set_within(g.adjacency(), DominationMode::Standard, 10));
}

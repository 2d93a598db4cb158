#include <gtest/gtest.h>

#include <set>

#include "bipdom/domset.hpp"
#include "bipdom/error.hpp"
#include "bipdom/graph_io.hpp"
#include "bipdom/reduction.hpp"
#include "fixtures.hpp"

using namespace bipdom;
using fixtures::code_of;

namespace {

constexpr ReductionKind kAllKinds[] = {ReductionKind::Bondage, ReductionKind::TotalBondage,
                                       ReductionKind::Reinforcement, ReductionKind::TotalReinforcement};

} // namespace

TEST(Kinds, NamesRoundTrip) {
    for (auto k : kAllKinds) EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_FALSE(parse_kind("bogus"));
    EXPECT_EQ(kind_name(ReductionKind::TotalReinforcement), "total-reinforcement");
    EXPECT_TRUE(uses_total_domination(ReductionKind::TotalBondage));
    EXPECT_FALSE(uses_total_domination(ReductionKind::Reinforcement));
}

TEST(Counts, Formulas) {
    EXPECT_EQ(expected_vertex_count(ReductionKind::Bondage, 4, 3), 30u);
    EXPECT_EQ(expected_edge_count(ReductionKind::Bondage, 4, 3), 41u);
    EXPECT_EQ(expected_vertex_count(ReductionKind::TotalBondage, 4, 3), 29u);
    EXPECT_EQ(expected_edge_count(ReductionKind::TotalBondage, 4, 3), 46u);
    EXPECT_EQ(expected_vertex_count(ReductionKind::Reinforcement, 4, 3), 28u);
    EXPECT_EQ(expected_edge_count(ReductionKind::Reinforcement, 4, 3), 36u);
    EXPECT_EQ(expected_vertex_count(ReductionKind::TotalReinforcement, 4, 3), 26u);
    EXPECT_EQ(expected_edge_count(ReductionKind::TotalReinforcement, 4, 3), 38u);
}

TEST(Bondage, SampleStructure) {
    auto out = build_bondage(fixtures::sample());
    const auto& g = out.graph;
    EXPECT_EQ(g.vertex_count(), 30u);
    EXPECT_EQ(g.edge_count(), 41u);
    // Hexagon u1 v1 nu1 r1 q1 p1.
    for (auto [a, b] : {std::pair{"u1", "v1"}, {"v1", "nu1"}, {"nu1", "r1"}, {"r1", "q1"}, {"q1", "p1"}, {"p1", "u1"}})
        EXPECT_TRUE(g.has_edge(a, b)) << a << "-" << b;
    EXPECT_FALSE(g.has_edge("u1", "nu1"));
    EXPECT_EQ(open_neighbors(g, "c1"), (VertexSet{"u1", "u2", "nu3", "s1", "s3"}));
    EXPECT_EQ(open_neighbors(g, "s2"), (VertexSet{"s1", "s3"}));
    EXPECT_TRUE(is_bipartite(g).bipartite);
}

TEST(TotalBondage, SampleStructure) {
    auto out = build_total_bondage(fixtures::sample());
    const auto& g = out.graph;
    EXPECT_EQ(g.vertex_count(), 29u);
    EXPECT_EQ(g.edge_count(), 46u);
    EXPECT_EQ(open_neighbors(g, "v1"), (VertexSet{"u1", "nu1", "p1"}));
    EXPECT_EQ(open_neighbors(g, "q1"), (VertexSet{"u1", "nu1", "p1"}));
    EXPECT_EQ(open_neighbors(g, "s5"), (VertexSet{"s2", "s4", "s6"}));
    EXPECT_EQ(open_neighbors(g, "s6"), (VertexSet{"s5"}));
    EXPECT_EQ(open_neighbors(g, "c2"), (VertexSet{"nu1", "u2", "u4", "s1", "s3"}));
    EXPECT_TRUE(is_bipartite(g).bipartite);
}

TEST(Reinforcement, SampleStructure) {
    auto out = build_reinforcement(fixtures::sample());
    const auto& g = out.graph;
    EXPECT_EQ(g.vertex_count(), 28u);
    EXPECT_EQ(g.edge_count(), 36u);
    EXPECT_EQ(open_neighbors(g, "s"), (VertexSet{"c1", "c2", "c3"}));
    EXPECT_EQ(open_neighbors(g, "c3"), (VertexSet{"nu2", "u3", "u4", "s"}));
    EXPECT_TRUE(is_bipartite(g).bipartite);
}

TEST(TotalReinforcement, SampleBStructure) {
    auto out = build_total_reinforcement(fixtures::sample_b());
    const auto& g = out.graph;
    EXPECT_EQ(g.vertex_count(), 26u);
    EXPECT_EQ(g.edge_count(), 38u);
    EXPECT_EQ(open_neighbors(g, "s1"), (VertexSet{"c1", "c2", "c3", "s2"}));
    EXPECT_EQ(open_neighbors(g, "s3"), (VertexSet{"s2"}));
    EXPECT_EQ(open_neighbors(g, "c3"), (VertexSet{"nu2", "nu3", "u4", "s1"}));
    EXPECT_TRUE(is_bipartite(g).bipartite);
}

TEST(Roles, Sample) {
    auto out = build_bondage(fixtures::sample());
    EXPECT_EQ(out.role_of("u2"), Role::LiteralPos);
    EXPECT_EQ(out.role_of("nu2"), Role::LiteralNeg);
    EXPECT_EQ(out.role_of("q4"), Role::CycleAux);
    EXPECT_EQ(out.role_of("c3"), Role::Clause);
    EXPECT_EQ(out.role_of("s2"), Role::Anchor);
    EXPECT_EQ(code_of([&] { out.role_of("zz"); }), ErrorCode::UnknownVertex);
    const auto roles = write_roles(out);
    EXPECT_EQ(roles.substr(0, 24), "u1 literal+\nv1 cycle-aux");
    EXPECT_NE(roles.find("c1 clause\n"), std::string::npos);
    EXPECT_EQ(roles.substr(roles.size() - 10), "s3 anchor\n");
}

TEST(Property, CountsBipartitenessAndRoles) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);
        const int m = static_cast<int>(seed % 11);
        auto inst = random_instance(n, m, seed);
        for (auto kind : kAllKinds) {
            auto out = build(kind, inst);
            const auto& g = out.graph;
            ASSERT_EQ(g.vertex_count(), expected_vertex_count(kind, n, m));
            ASSERT_EQ(g.edge_count(), expected_edge_count(kind, n, m));
            ASSERT_EQ(out.roles.size(), g.vertex_count());
            auto bip = is_bipartite(g);
            ASSERT_TRUE(bip.bipartite) << kind_name(kind) << " seed " << seed;

            std::size_t literal = 0, clause = 0;
            for (std::size_t i = 0; i < g.vertex_count(); ++i) {
                const auto role = out.roles[i];
                if (role == Role::LiteralPos || role == Role::LiteralNeg) ++literal;
                if (role == Role::Clause) {
                    ++clause;
                    // Clause vertices see their three literals plus the anchor joins.
                    std::size_t literal_neighbors = 0;
                    for (const auto& l : open_neighbors(g, g.label(i))) {
                        const auto r = out.role_of(l);
                        if (r == Role::LiteralPos || r == Role::LiteralNeg) ++literal_neighbors;
                    }
                    ASSERT_EQ(literal_neighbors, 3u);
                }
            }
            ASSERT_EQ(literal, static_cast<std::size_t>(2 * n));
            ASSERT_EQ(clause, static_cast<std::size_t>(m));
            // Literal vertices of a variable sit on the same side in the hexagon gadgets.
            if (!uses_total_domination(kind)) {
                for (int i = 1; i <= n; ++i)
                    ASSERT_EQ((*bip.coloring)[g.index_of("u" + std::to_string(i))],
                              (*bip.coloring)[g.index_of("nu" + std::to_string(i))]);
            }
        }
    }
}

TEST(Property, Deterministic) {
    auto inst = random_instance(5, 9, 17);
    for (auto kind : kAllKinds) {
        auto a = build(kind, inst);
        auto b = build(kind, inst);
        EXPECT_EQ(write_graph_text(a.graph), write_graph_text(b.graph));
        EXPECT_EQ(write_roles(a), write_roles(b));
    }
}

TEST(Witness, SampleBondage) {
    auto out = build_bondage(fixtures::sample());
    auto w = assignment_to_witness(out, fixtures::assignment({false, true, false, true}));
    EXPECT_EQ(w.vertices, (VertexSet{"nu1", "p1", "u2", "r2", "nu3", "p3", "u4", "r4", "s2"}));
    EXPECT_FALSE(w.added_edge);
    EXPECT_TRUE(is_dominating_set(out.graph, w.vertices));
    EXPECT_EQ(witness_to_assignment(out, w.vertices), fixtures::assignment({false, true, false, true}));
}

TEST(Witness, MinimumSetMapsBack) {
    auto out = build_bondage(fixtures::sample());
    VertexSet minimum = {"s2", "v1", "q1", "u2", "r2", "u3", "r3", "u4", "r4"};
    EXPECT_TRUE(is_dominating_set(out.graph, minimum));
    auto t = witness_to_assignment(out, minimum);
    EXPECT_EQ(t, fixtures::assignment({false, true, true, true}));
    EXPECT_TRUE(evaluate(out.instance, t));
}

TEST(Witness, TotalKindsAndReinforcement) {
    const auto t = fixtures::assignment({false, true, false, true});
    auto tb = build_total_bondage(fixtures::sample());
    auto wtb = assignment_to_witness(tb, t);
    EXPECT_EQ(wtb.vertices.size(), 10u);
    EXPECT_TRUE(is_total_dominating_set(tb.graph, wtb.vertices));

    auto re = build_reinforcement(fixtures::sample());
    auto wre = assignment_to_witness(re, t);
    EXPECT_EQ(wre.vertices.size(), 8u);
    ASSERT_TRUE(wre.added_edge);
    EXPECT_EQ(*wre.added_edge, Edge("s", "nu1"));
    std::vector<Edge> add = {*wre.added_edge};
    EXPECT_TRUE(is_dominating_set(add_edges(re.graph, add), wre.vertices));
    EXPECT_FALSE(is_dominating_set(re.graph, wre.vertices));

    auto tr = build_total_reinforcement(fixtures::sample_b());
    auto t4 = fixtures::assignment({true, false, false, true});
    auto wtr = assignment_to_witness(tr, t4);
    EXPECT_EQ(wtr.vertices.size(), 9u);
    ASSERT_TRUE(wtr.added_edge);
    EXPECT_EQ(*wtr.added_edge, Edge("s2", "u1"));
    std::vector<Edge> add4 = {*wtr.added_edge};
    EXPECT_TRUE(is_total_dominating_set(add_edges(tr.graph, add4), wtr.vertices));
}

TEST(Witness, Errors) {
    auto out = build_bondage(fixtures::sample());
    EXPECT_EQ(code_of([&] { assignment_to_witness(out, fixtures::assignment({false, false, true, false})); }),
              ErrorCode::UnsatisfyingAssignment);
    EXPECT_EQ(code_of([&] { assignment_to_witness(out, fixtures::assignment({true})); }),
              ErrorCode::PartialAssignment);

    // A bondage graph relabelled as a total-bondage output lacks s4..s6.
    auto mismatched = out;
    mismatched.kind = ReductionKind::TotalBondage;
    EXPECT_EQ(code_of([&] { assignment_to_witness(mismatched, fixtures::assignment({false, true, false, true})); }),
              ErrorCode::KindMismatch);
}

TEST(Witness, SatisfyingAssignmentsAlwaysGiveSetsOfTheBoundSize) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 3 + static_cast<int>(seed % 4);
        auto inst = random_instance(n, 2 + static_cast<int>(seed % 6), seed + 100);
        auto t = solve_sat(inst);
        if (!t) continue;
        const auto un = static_cast<std::size_t>(n);
        for (auto kind : kAllKinds) {
            auto out = build(kind, inst);
            auto w = assignment_to_witness(out, *t);
            Graph g = out.graph;
            if (w.added_edge) {
                std::vector<Edge> add = {*w.added_edge};
                g = add_edges(g, add);
            }
            switch (kind) {
            case ReductionKind::Bondage: EXPECT_EQ(w.vertices.size(), 2 * un + 1); break;
            case ReductionKind::TotalBondage: EXPECT_EQ(w.vertices.size(), 2 * un + 2); break;
            case ReductionKind::Reinforcement: EXPECT_EQ(w.vertices.size(), 2 * un); break;
            case ReductionKind::TotalReinforcement: EXPECT_EQ(w.vertices.size(), 2 * un + 1); break;
            }
            if (uses_total_domination(kind)) EXPECT_TRUE(is_total_dominating_set(g, w.vertices));
            else EXPECT_TRUE(is_dominating_set(g, w.vertices));
            EXPECT_EQ(witness_to_assignment(out, w.vertices), *t);
        }
    }
}

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipdom/cnf.hpp"
#include "bipdom/graph.hpp"

namespace bipdom {

enum class ReductionKind { Bondage, TotalBondage, Reinforcement, TotalReinforcement };

std::string_view kind_name(ReductionKind kind);
/// Accepts the kebab-case names produced by kind_name.
std::optional<ReductionKind> parse_kind(std::string_view name);

/// True for the kinds measured with total domination.
constexpr bool uses_total_domination(ReductionKind kind) {
    return kind == ReductionKind::TotalBondage || kind == ReductionKind::TotalReinforcement;
}

enum class Role {
    LiteralPos, ///< u<i>
    LiteralNeg, ///< nu<i>
    CycleAux,   ///< v<i>, p<i>, q<i>, r<i>
    Clause,     ///< c<j>
    Anchor,     ///< s, s<k>
};

std::string_view role_name(Role role);

/// Gadget graph built from a 3SAT instance.
///
/// Labels: `u<i>`, `nu<i>` (negated literal), `v<i>`, `p<i>`, `q<i>`,
/// `r<i>` per variable, `c<j>` per clause, and `s<k>` (or `s` for the
/// single reinforcement apex) for the anchor gadget.
struct ReductionOutput {
    ReductionKind kind = ReductionKind::Bondage;
    CnfInstance instance;
    Graph graph;
    /// Role per vertex index.
    std::vector<Role> roles;

    int n() const { return instance.num_vars(); }
    int m() const { return static_cast<int>(instance.num_clauses()); }
    /// Throws UnknownVertex.
    Role role_of(std::string_view label) const { return roles[graph.index_of(label)]; }
};

std::size_t expected_vertex_count(ReductionKind kind, int n, int m);
std::size_t expected_edge_count(ReductionKind kind, int n, int m);

/// Hexagons H_i = u v nu r q p, clause vertices, path s1 s2 s3 with s1 and s3 joined to every c_j.
ReductionOutput build_bondage(const CnfInstance& inst);
/// Five-vertex H_i on {u, nu, v, p, q}, clause vertices, six-vertex anchor on s1..s6.
ReductionOutput build_total_bondage(const CnfInstance& inst);
/// Hexagons, clause vertices, and an apex s joined to every c_j.
ReductionOutput build_reinforcement(const CnfInstance& inst);
/// Five-vertex H_i, clause vertices, path s1 s2 s3 with s1 joined to every c_j.
ReductionOutput build_total_reinforcement(const CnfInstance& inst);

ReductionOutput build(ReductionKind kind, const CnfInstance& inst);

/// Label of the literal vertex, e.g. u3 or nu3.
std::string literal_label(Literal lit);

struct ReductionWitness {
    VertexSet vertices;
    /// Edge to add first; present for the reinforcement kinds.
    std::optional<Edge> added_edge;
};

/// Converts a satisfying assignment into a (total) dominating set of the
/// gadget graph, plus the reinforcing edge where the kind needs one.
/// Throws UnsatisfyingAssignment, PartialAssignment, KindMismatch.
ReductionWitness assignment_to_witness(const ReductionOutput& out, const Assignment& t);

/// t(u_i) = T iff u<i> is in the set.
Assignment witness_to_assignment(const ReductionOutput& out, std::span<const Label> set);

/// Sidecar role map: one `<label> <role>` line per vertex, in vertex order.
std::string write_roles(const ReductionOutput& out);

} // namespace bipdom

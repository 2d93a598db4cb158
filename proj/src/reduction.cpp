#include "bipdom/reduction.hpp"

#include <utility>

#include "bipdom/error.hpp"

namespace bipdom {

std::string_view kind_name(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::Bondage: return "bondage";
    case ReductionKind::TotalBondage: return "total-bondage";
    case ReductionKind::Reinforcement: return "reinforcement";
    case ReductionKind::TotalReinforcement: return "total-reinforcement";
    }
    return "?";
}

std::optional<ReductionKind> parse_kind(std::string_view name) {
    for (auto k : {ReductionKind::Bondage, ReductionKind::TotalBondage, ReductionKind::Reinforcement,
                   ReductionKind::TotalReinforcement})
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

std::string_view role_name(Role role) {
    switch (role) {
    case Role::LiteralPos: return "literal+";
    case Role::LiteralNeg: return "literal-";
    case Role::CycleAux: return "cycle-aux";
    case Role::Clause: return "clause";
    case Role::Anchor: return "anchor";
    }
    return "?";
}

std::string literal_label(Literal lit) { return (lit.positive ? "u" : "nu") + std::to_string(lit.var); }

std::size_t expected_vertex_count(ReductionKind kind, int n, int m) {
    const auto un = static_cast<std::size_t>(n);
    const auto um = static_cast<std::size_t>(m);
    switch (kind) {
    case ReductionKind::Bondage: return 6 * un + um + 3;
    case ReductionKind::TotalBondage: return 5 * un + um + 6;
    case ReductionKind::Reinforcement: return 6 * un + um + 1;
    case ReductionKind::TotalReinforcement: return 5 * un + um + 3;
    }
    return 0;
}

std::size_t expected_edge_count(ReductionKind kind, int n, int m) {
    const auto un = static_cast<std::size_t>(n);
    const auto um = static_cast<std::size_t>(m);
    switch (kind) {
    case ReductionKind::Bondage: return 6 * un + 5 * um + 2;
    case ReductionKind::TotalBondage: return 6 * un + 5 * um + 7;
    case ReductionKind::Reinforcement: return 6 * un + 4 * um;
    case ReductionKind::TotalReinforcement: return 6 * un + 4 * um + 2;
    }
    return 0;
}

namespace {

struct Builder {
    std::vector<Label> vertices;
    std::vector<Role> roles;
    std::vector<std::pair<Label, Label>> edges;

    void vertex(Label l, Role r) {
        vertices.push_back(std::move(l));
        roles.push_back(r);
    }
    void edge(const Label& a, const Label& b) { edges.emplace_back(a, b); }

    ReductionOutput finish(ReductionKind kind, const CnfInstance& inst) {
        ReductionOutput out;
        out.kind = kind;
        out.instance = inst;
        out.graph = Graph::from_edge_list(std::move(vertices), edges);
        out.roles = std::move(roles);
        return out;
    }
};

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

void add_hexagons(Builder& b, int n) {
    for (int i = 1; i <= n; ++i) {
        // Cycle order u v nu r q p.
        const std::string cycle[] = {idx("u", i), idx("v", i), idx("nu", i), idx("r", i), idx("q", i), idx("p", i)};
        b.vertex(cycle[0], Role::LiteralPos);
        b.vertex(cycle[1], Role::CycleAux);
        b.vertex(cycle[2], Role::LiteralNeg);
        b.vertex(cycle[3], Role::CycleAux);
        b.vertex(cycle[4], Role::CycleAux);
        b.vertex(cycle[5], Role::CycleAux);
        for (int k = 0; k < 6; ++k) b.edge(cycle[k], cycle[(k + 1) % 6]);
    }
}

void add_five_vertex_gadgets(Builder& b, int n) {
    for (int i = 1; i <= n; ++i) {
        const auto u = idx("u", i), nu = idx("nu", i), v = idx("v", i), p = idx("p", i), q = idx("q", i);
        b.vertex(u, Role::LiteralPos);
        b.vertex(nu, Role::LiteralNeg);
        b.vertex(v, Role::CycleAux);
        b.vertex(p, Role::CycleAux);
        b.vertex(q, Role::CycleAux);
        b.edge(u, v);
        b.edge(u, q);
        b.edge(nu, v);
        b.edge(v, p);
        b.edge(p, q);
        b.edge(nu, q);
    }
}

void add_clause_vertices(Builder& b, const CnfInstance& inst) {
    int j = 0;
    for (const auto& clause : inst.clauses()) {
        const auto c = idx("c", ++j);
        b.vertex(c, Role::Clause);
        for (const auto& lit : clause) b.edge(c, literal_label(lit));
    }
}

void join_to_clauses(Builder& b, const Label& anchor, int m) {
    for (int j = 1; j <= m; ++j) b.edge(anchor, idx("c", j));
}

/// Looks up a label the kind guarantees; a miss means the output does not match its kind.
const Label& require(const ReductionOutput& out, const std::string& label) {
    auto i = out.graph.find(label);
    if (!i) throw Error(ErrorCode::KindMismatch, std::string(kind_name(out.kind)) + " gadget has no vertex " + label);
    return out.graph.label(*i);
}

} // namespace

ReductionOutput build_bondage(const CnfInstance& inst) {
    Builder b;
    add_hexagons(b, inst.num_vars());
    add_clause_vertices(b, inst);
    for (const char* s : {"s1", "s2", "s3"}) b.vertex(s, Role::Anchor);
    b.edge("s1", "s2");
    b.edge("s2", "s3");
    join_to_clauses(b, "s1", static_cast<int>(inst.num_clauses()));
    join_to_clauses(b, "s3", static_cast<int>(inst.num_clauses()));
    return b.finish(ReductionKind::Bondage, inst);
}

ReductionOutput build_total_bondage(const CnfInstance& inst) {
    Builder b;
    add_five_vertex_gadgets(b, inst.num_vars());
    add_clause_vertices(b, inst);
    for (const char* s : {"s1", "s2", "s3", "s4", "s5", "s6"}) b.vertex(s, Role::Anchor);
    b.edge("s1", "s2");
    b.edge("s1", "s4");
    b.edge("s2", "s3");
    b.edge("s2", "s5");
    b.edge("s3", "s4");
    b.edge("s4", "s5");
    b.edge("s5", "s6");
    join_to_clauses(b, "s1", static_cast<int>(inst.num_clauses()));
    join_to_clauses(b, "s3", static_cast<int>(inst.num_clauses()));
    return b.finish(ReductionKind::TotalBondage, inst);
}

ReductionOutput build_reinforcement(const CnfInstance& inst) {
    Builder b;
    add_hexagons(b, inst.num_vars());
    add_clause_vertices(b, inst);
    b.vertex("s", Role::Anchor);
    join_to_clauses(b, "s", static_cast<int>(inst.num_clauses()));
    return b.finish(ReductionKind::Reinforcement, inst);
}

ReductionOutput build_total_reinforcement(const CnfInstance& inst) {
    Builder b;
    add_five_vertex_gadgets(b, inst.num_vars());
    add_clause_vertices(b, inst);
    for (const char* s : {"s1", "s2", "s3"}) b.vertex(s, Role::Anchor);
    b.edge("s1", "s2");
    b.edge("s2", "s3");
    join_to_clauses(b, "s1", static_cast<int>(inst.num_clauses()));
    return b.finish(ReductionKind::TotalReinforcement, inst);
}

ReductionOutput build(ReductionKind kind, const CnfInstance& inst) {
    switch (kind) {
    case ReductionKind::Bondage: return build_bondage(inst);
    case ReductionKind::TotalBondage: return build_total_bondage(inst);
    case ReductionKind::Reinforcement: return build_reinforcement(inst);
    case ReductionKind::TotalReinforcement: return build_total_reinforcement(inst);
    }
    return build_bondage(inst);
}

ReductionWitness assignment_to_witness(const ReductionOutput& out, const Assignment& t) {
    if (!evaluate(out.instance, t))
        throw Error(ErrorCode::UnsatisfyingAssignment, "assignment does not satisfy the instance");

    ReductionWitness w;
    const int n = out.n();
    const bool hexagon = out.kind == ReductionKind::Bondage || out.kind == ReductionKind::Reinforcement;
    for (int i = 1; i <= n; ++i) {
        const bool value = t.value(i);
        w.vertices.push_back(require(out, literal_label(Literal{i, value})));
        if (hexagon) w.vertices.push_back(require(out, idx(value ? "r" : "p", i)));
    }
    if (!hexagon)
        for (int i = 1; i <= n; ++i) w.vertices.push_back(require(out, idx("v", i)));

    // Every variable contributes a true literal; variable 1 is the lowest-index one.
    const auto first_true = n >= 1 ? std::optional<Label>(literal_label(Literal{1, t.value(1)})) : std::nullopt;
    switch (out.kind) {
    case ReductionKind::Bondage: w.vertices.push_back(require(out, "s2")); break;
    case ReductionKind::TotalBondage:
        w.vertices.push_back(require(out, "s2"));
        w.vertices.push_back(require(out, "s5"));
        break;
    case ReductionKind::Reinforcement:
        require(out, "s");
        if (first_true) w.added_edge = Edge("s", *first_true);
        break;
    case ReductionKind::TotalReinforcement:
        w.vertices.push_back(require(out, "s2"));
        if (first_true) w.added_edge = Edge("s2", *first_true);
        break;
    }
    return w;
}

Assignment witness_to_assignment(const ReductionOutput& out, std::span<const Label> set) {
    Assignment t = Assignment::all_false(out.n());
    for (const auto& label : set) {
        if (label.size() < 2 || label[0] != 'u') continue;
        const auto i = out.graph.find(label);
        if (!i || out.roles[*i] != Role::LiteralPos) continue;
        t.set(std::stoi(label.substr(1)), true);
    }
    return t;
}

std::string write_roles(const ReductionOutput& out) {
    std::string s;
    for (std::size_t i = 0; i < out.graph.vertex_count(); ++i)
        s += out.graph.label(i) + " " + std::string(role_name(out.roles[i])) + "\n";
    return s;
}

} // namespace bipdom

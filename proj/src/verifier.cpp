#include "bipdom/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <thread>

#include "json.hpp"

#include "bipdom/error.hpp"

namespace bipdom {

bool VerificationReport::pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.pass; });
}

std::vector<const ClaimCheck*> VerificationReport::failures() const {
    std::vector<const ClaimCheck*> out;
    for (const auto& c : claims)
        if (!c.pass) out.push_back(&c);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(const VertexSet& set) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + set[i];
    return s + "}";
}

std::string edge_text(const Edge& e) { return e.first + "-" + e.second; }

/// Vertex groups of a gadget graph, as dense-index bitsets.
struct GadgetParts {
    std::vector<Bitset> variable_gadget; // V(H_i)
    std::vector<Bitset> literal_pair;    // {u_i, nu_i}
    std::vector<std::size_t> v_vertex;
    std::vector<std::size_t> q_vertex;
    Bitset clauses;

    explicit GadgetParts(const ReductionOutput& out) : clauses(out.graph.vertex_count()) {
        const auto& g = out.graph;
        const bool hexagon = out.kind == ReductionKind::Bondage || out.kind == ReductionKind::Reinforcement;
        for (int i = 1; i <= out.n(); ++i) {
            const auto s = std::to_string(i);
            std::vector<Label> h = {"u" + s, "nu" + s, "v" + s, "p" + s, "q" + s};
            if (hexagon) h.push_back("r" + s);
            variable_gadget.push_back(g.to_bitset(h));
            const std::vector<Label> lits = {"u" + s, "nu" + s};
            literal_pair.push_back(g.to_bitset(lits));
            v_vertex.push_back(g.index_of("v" + s));
            q_vertex.push_back(g.index_of("q" + s));
        }
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            if (out.roles[i] == Role::Clause) clauses.set(i);
    }

    /// Common shape of an optimal set: two vertices per variable gadget,
    /// at most one literal per variable, no clause vertex. Empty on success.
    std::string variable_shape_violation(const Graph& g, const Bitset& d) const {
        for (std::size_t i = 0; i < variable_gadget.size(); ++i) {
            if ((d & variable_gadget[i]).count() != 2) return "|D cap H" + str(i + 1) + "| != 2";
            if ((d & literal_pair[i]).count() > 1) return "both literals of variable " + str(i + 1);
        }
        if (d.intersects(clauses)) return "clause vertex " + g.to_labels(d & clauses).front() + " in D";
        return {};
    }
};

ClaimCheck structure_check(const ReductionOutput& out) {
    const auto nv = expected_vertex_count(out.kind, out.n(), out.m());
    const auto ne = expected_edge_count(out.kind, out.n(), out.m());
    const bool bip = is_bipartite(out.graph).bipartite;
    ClaimCheck c{"gadget-structure", "bipartite, " + str(nv) + " vertices, " + str(ne) + " edges",
                 std::string(bip ? "bipartite" : "not bipartite") + ", " + str(out.graph.vertex_count()) + " vertices, " +
                     str(out.graph.edge_count()) + " edges",
                 false};
    c.pass = bip && out.graph.vertex_count() == nv && out.graph.edge_count() == ne;
    return c;
}

DominationMode mode_of(ReductionKind kind) {
    return uses_total_domination(kind) ? DominationMode::Total : DominationMode::Standard;
}

const char* gamma_name(ReductionKind kind) { return uses_total_domination(kind) ? "gamma_t" : "gamma"; }

/// Every single-edge removal keeps the parameter within `bound`. Removals
/// that isolate a vertex are skipped in total mode.
ClaimCheck edge_removal_bound(const ReductionOutput& out, std::size_t bound) {
    const auto mode = mode_of(out.kind);
    const auto& g = out.graph;
    Adjacency adj = g.adjacency();
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::string first_failure;
    for (const auto& [a, b] : g.edge_indices()) {
        adj.remove_edge(a, b);
        if (mode == DominationMode::Total && adj.has_isolated_vertex()) {
            ++skipped;
        } else {
            ++checked;
            if (first_failure.empty() && !find_dominating_set_within(adj, mode, bound))
                first_failure = g.label(a) + "-" + g.label(b);
        }
        adj.add_edge(a, b);
    }
    ClaimCheck c{"edge-removal-bound",
                 std::string(gamma_name(out.kind)) + "(G-e) <= " + str(bound) + " for every edge",
                 first_failure.empty() ? "holds for " + str(checked) + " edges (" + str(skipped) + " isolating skipped)"
                                       : "exceeded after removing " + first_failure,
                 first_failure.empty()};
    return c;
}

ClaimCheck set_to_assignment_check(const ReductionOutput& out, const VertexSet& set, const char* id) {
    const auto t = witness_to_assignment(out, set);
    const bool ok = evaluate(out.instance, t);
    return {id, "assignment read from " + join(set) + " satisfies the instance", ok ? "satisfies" : "does not satisfy",
            ok};
}

/// Applying the witness edges moves the parameter; every proper subset does not.
ClaimCheck perturbation_witness_check(const ReductionOutput& out, const PerturbResult& r, bool removal) {
    const auto mode = mode_of(out.kind);
    const auto& g = out.graph;
    auto changes = [&](const std::vector<Edge>& edges) {
        Graph h = removal ? remove_edges(g, edges) : add_edges(g, edges);
        if (removal && mode == DominationMode::Total && h.adjacency().has_isolated_vertex()) return false;
        const auto value = minimum_dominating_set(h.adjacency(), mode).value;
        return removal ? value > r.base : value < r.base;
    };
    bool ok = changes(r.witness);
    const std::size_t k = r.witness.size();
    for (std::size_t mask = 0; ok && mask + 1 < (std::size_t{1} << k); ++mask) {
        std::vector<Edge> subset;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(r.witness[i]);
        if (changes(subset)) ok = false;
    }
    std::string edges;
    for (const auto& e : r.witness) edges += (edges.empty() ? "" : ",") + edge_text(e);
    return {"perturbation-witness", "witness {" + edges + "} is minimal and changes " + gamma_name(out.kind),
            ok ? "confirmed" : "not confirmed", ok};
}

ClaimCheck assignment_witness_check(const ReductionOutput& out, const Assignment& t, std::size_t expected_size) {
    const auto w = assignment_to_witness(out, t);
    Graph h = w.added_edge ? add_edges(out.graph, std::span<const Edge>(&*w.added_edge, 1)) : out.graph;
    const bool dominates_h = uses_total_domination(out.kind) ? is_total_dominating_set(h, w.vertices)
                                                             : is_dominating_set(h, w.vertices);
    std::string where = w.added_edge ? "G+" + edge_text(*w.added_edge) : "G";
    return {"assignment-to-witness",
            std::string(uses_total_domination(out.kind) ? "total " : "") + "dominating set of " + where + " of size " +
                str(expected_size),
            join(w.vertices) + (dominates_h ? " dominates" : " does not dominate") + ", size " + str(w.vertices.size()),
            dominates_h && w.vertices.size() == expected_size};
}

struct Context {
    ReductionOutput out;
    std::optional<Assignment> model;
    VerificationReport report;
    Clock::time_point start = Clock::now();

    Context(ReductionKind kind, const CnfInstance& inst) : out(build(kind, inst)), model(solve_sat(inst)) {
        report.kind = kind;
        report.n = inst.num_vars();
        report.m = static_cast<int>(inst.num_clauses());
        report.instance_dimacs = to_dimacs(inst);
        report.sat = model.has_value();
        report.claims.push_back(structure_check(out));
    }

    std::size_t n() const { return static_cast<std::size_t>(out.n()); }

    void add(ClaimCheck c) { report.claims.push_back(std::move(c)); }

    VerificationReport finish() {
        report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return std::move(report);
    }
};

/// Shared skeleton of the two edge-removal reductions.
template <typename DeepCheck>
VerificationReport verify_removal_kind(ReductionKind kind, const CnfInstance& inst, const VerifyOptions& opts,
                                       std::size_t base_bound, DeepCheck&& deep_check) {
    Context ctx(kind, inst);
    const auto& g = ctx.out.graph;
    const bool total = uses_total_domination(kind);
    const char* gname = gamma_name(kind);
    const char* pname = total ? "b_t" : "b";

    const auto dom = total ? total_domination_number(g) : domination_number(g);
    ctx.report.gamma = dom.value;
    ctx.report.gamma_witness = dom.witness;
    const bool tight = dom.value == base_bound;

    ctx.add({std::string(gname) + "-lower-bound", ">= " + str(base_bound), str(dom.value), dom.value >= base_bound});
    ctx.add({std::string(gname) + "-iff-sat", std::string(gname) + " == " + str(base_bound) + " iff sat",
             std::string(gname) + "=" + str(dom.value) + ", sat=" + str(ctx.report.sat), tight == ctx.report.sat});
    ctx.add(edge_removal_bound(ctx.out, base_bound + 1));

    ctx.report.perturbation = total ? total_bondage_number(g, opts.max_k) : bondage_number(g, opts.max_k);
    const auto& pr = ctx.report.perturbation;
    ctx.add({std::string(pname) + "-iff-sat", std::string(pname) + " == 1 iff sat iff " + gname + " == " + str(base_bound),
             std::string(pname) + "=" + describe(pr) + ", sat=" + str(ctx.report.sat),
             pr.is_one() == ctx.report.sat && pr.is_one() == tight});
    if (pr.found()) ctx.add(perturbation_witness_check(ctx.out, pr, true));

    if (tight) ctx.add(set_to_assignment_check(ctx.out, dom.witness, "set-to-assignment"));
    if (ctx.model) ctx.add(assignment_witness_check(ctx.out, *ctx.model, base_bound));

    if (opts.deep) {
        ctx.report.deep_checked = true;
        const auto sets = enumerate_minimum_sets(g, total, opts.enumeration_cap);
        std::string violation;
        for (const auto& d : sets) {
            violation = deep_check(ctx.out, g.to_bitset(d), tight);
            if (!violation.empty()) {
                violation = join(d) + ": " + violation;
                break;
            }
        }
        ctx.add({"min-set-structure", "every minimum set has the gadget shape",
                 violation.empty() ? str(sets.size()) + " sets conform" : violation, violation.empty()});
    }
    return ctx.finish();
}

/// Shared skeleton of the two edge-addition reductions.
template <typename DeepCheck>
VerificationReport verify_addition_kind(ReductionKind kind, const CnfInstance& inst, const VerifyOptions& opts,
                                        std::size_t base_value, DeepCheck&& deep_check) {
    Context ctx(kind, inst);
    const auto& g = ctx.out.graph;
    const bool total = uses_total_domination(kind);
    const auto mode = mode_of(kind);
    const char* gname = gamma_name(kind);
    const char* pname = total ? "r_t" : "r";

    const auto dom = total ? total_domination_number(g) : domination_number(g);
    ctx.report.gamma = dom.value;
    ctx.report.gamma_witness = dom.witness;
    ctx.add({std::string(gname) + "-exact", "== " + str(base_value), str(dom.value), dom.value == base_value});

    ctx.report.perturbation = total ? total_reinforcement_number(g, opts.max_k) : reinforcement_number(g, opts.max_k);
    const auto& pr = ctx.report.perturbation;
    ctx.add({std::string(pname) + "-iff-sat", std::string(pname) + " == 1 iff sat",
             std::string(pname) + "=" + describe(pr) + ", sat=" + str(ctx.report.sat), pr.is_one() == ctx.report.sat});
    if (pr.found()) ctx.add(perturbation_witness_check(ctx.out, pr, false));

    if (pr.is_one()) {
        Graph h = add_edges(g, pr.witness);
        const auto reinforced = minimum_dominating_set(h.adjacency(), mode);
        ctx.add(set_to_assignment_check(ctx.out, h.to_labels(reinforced.witness), "set-to-assignment"));
    }
    if (ctx.model) ctx.add(assignment_witness_check(ctx.out, *ctx.model, base_value - 1));

    if (opts.deep) {
        ctx.report.deep_checked = true;
        std::size_t edges_checked = 0;
        std::size_t sets_checked = 0;
        std::string violation;
        Adjacency adj = g.adjacency();
        for (const auto& e : complement_edges(g)) {
            const auto a = g.index_of(e.first);
            const auto b = g.index_of(e.second);
            adj.add_edge(a, b);
            if (find_dominating_set_within(adj, mode, base_value - 1)) {
                ++edges_checked;
                const auto optimum = minimum_dominating_set(adj, mode).value;
                for (const auto& d : enumerate_dominating_sets_within(adj, mode, optimum, opts.enumeration_cap)) {
                    ++sets_checked;
                    auto v = deep_check(ctx.out, d);
                    if (!v.empty()) {
                        violation = "G+" + edge_text(e) + ", " + join(g.to_labels(d)) + ": " + v;
                        break;
                    }
                }
            }
            adj.remove_edge(a, b);
            if (!violation.empty()) break;
        }
        ctx.add({"reinforced-set-structure", "minimum sets of every reinforcing G+e have the gadget shape",
                 violation.empty() ? str(sets_checked) + " sets over " + str(edges_checked) + " edges conform" : violation,
                 violation.empty()});
    }
    return ctx.finish();
}

} // namespace

VerificationReport verify_bondage(const CnfInstance& inst, const VerifyOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(inst.num_vars());
    return verify_removal_kind(ReductionKind::Bondage, inst, opts, 2 * n + 1,
                               [](const ReductionOutput& out, const Bitset& d, bool tight) -> std::string {
                                   if (!tight) return {};
                                   const auto& g = out.graph;
                                   const std::vector<Label> path = {"s1", "s2", "s3"};
                                   const auto on_path = d & g.to_bitset(path);
                                   if (on_path.count() != 1 || !on_path.test(g.index_of("s2")))
                                       return "D cap P = " + join(g.to_labels(on_path));
                                   return GadgetParts(out).variable_shape_violation(g, d);
                               });
}

VerificationReport verify_total_bondage(const CnfInstance& inst, const VerifyOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(inst.num_vars());
    return verify_removal_kind(
        ReductionKind::TotalBondage, inst, opts, 2 * n + 2,
        [](const ReductionOutput& out, const Bitset& d, bool tight) -> std::string {
            const auto& g = out.graph;
            const GadgetParts parts(out);
            if (!d.test(g.index_of("s5"))) return "s5 not in D";
            for (std::size_t i = 0; i < parts.v_vertex.size(); ++i)
                if (!d.test(parts.v_vertex[i]) && !d.test(parts.q_vertex[i]))
                    return "neither v" + str(i + 1) + " nor q" + str(i + 1) + " in D";
            if (!tight) return {};
            const std::vector<Label> anchor = {"s1", "s2", "s3", "s4", "s5", "s6"};
            const auto on_anchor = g.to_labels(d & g.to_bitset(anchor));
            if (on_anchor != VertexSet{"s2", "s5"} && on_anchor != VertexSet{"s4", "s5"})
                return "D cap T = " + join(on_anchor);
            return parts.variable_shape_violation(g, d);
        });
}

VerificationReport verify_reinforcement(const CnfInstance& inst, const VerifyOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(inst.num_vars());
    return verify_addition_kind(ReductionKind::Reinforcement, inst, opts, 2 * n + 1,
                                [](const ReductionOutput& out, const Bitset& d) -> std::string {
                                    const auto& g = out.graph;
                                    if (d.test(g.index_of("s"))) return "apex s in D";
                                    return GadgetParts(out).variable_shape_violation(g, d);
                                });
}

VerificationReport verify_total_reinforcement(const CnfInstance& inst, const VerifyOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(inst.num_vars());
    return verify_addition_kind(ReductionKind::TotalReinforcement, inst, opts, 2 * n + 2,
                                [](const ReductionOutput& out, const Bitset& d) -> std::string {
                                    const auto& g = out.graph;
                                    if (d.test(g.index_of("s1"))) return "s1 in D";
                                    return GadgetParts(out).variable_shape_violation(g, d);
                                });
}

VerificationReport verify(ReductionKind kind, const CnfInstance& inst, const VerifyOptions& opts) {
    switch (kind) {
    case ReductionKind::Bondage: return verify_bondage(inst, opts);
    case ReductionKind::TotalBondage: return verify_total_bondage(inst, opts);
    case ReductionKind::Reinforcement: return verify_reinforcement(inst, opts);
    case ReductionKind::TotalReinforcement: return verify_total_reinforcement(inst, opts);
    }
    return verify_bondage(inst, opts);
}

std::uint64_t fuzz_trial_seed(std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<VerificationReport> fuzz(ReductionKind kind, int n, int m, std::size_t trials, std::uint64_t seed,
                                     const VerifyOptions& opts, unsigned jobs) {
    if (n < 3) throw Error(ErrorCode::TooFewVariables, "fuzzing needs at least 3 variables, got " + std::to_string(n));
    std::vector<VerificationReport> reports(trials);
    auto run_trial = [&](std::size_t i) {
        const auto s = fuzz_trial_seed(seed, i);
        reports[i] = verify(kind, random_instance(n, m, s), opts);
        reports[i].seed = s;
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < trials; ++i) run_trial(i);
        return reports;
    }
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < trials; i += jobs) run_trial(i);
        });
    for (auto& t : workers) t.join();
    return reports;
}

std::string report_to_text(const VerificationReport& r) {
    std::string s = "kind " + std::string(kind_name(r.kind)) + " n " + std::to_string(r.n) + " m " + std::to_string(r.m);
    if (r.seed) s += " seed " + std::to_string(*r.seed);
    s += "\nsat " + str(r.sat) + "\n";
    s += std::string(gamma_name(r.kind)) + " " + str(r.gamma) + " " + join(r.gamma_witness) + "\n";
    s += "perturbation " + describe(r.perturbation);
    for (const auto& e : r.perturbation.witness) s += " " + edge_text(e);
    s += "\n";
    for (const auto& c : r.claims)
        s += std::string(c.pass ? "PASS " : "FAIL ") + c.id + ": expected " + c.expected + "; observed " + c.observed +
             "\n";
    s += "deep " + str(r.deep_checked) + "\n";
    s += std::string("result ") + (r.pass() ? "PASS" : "FAIL") + "\n";
    return s;
}

namespace {

nlohmann::ordered_json to_json_value(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(r.kind);
    j["n"] = r.n;
    j["m"] = r.m;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    j["sat"] = r.sat;
    j[gamma_name(r.kind)] = r.gamma;
    if (r.perturbation.status == PerturbStatus::Found || r.perturbation.status == PerturbStatus::Zero)
        j["perturbation"] = r.perturbation.value;
    else
        j["perturbation"] = describe(r.perturbation);
    auto claims = nlohmann::ordered_json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"id", c.id}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
    j["claims"] = std::move(claims);
    j["deep_checked"] = r.deep_checked;
    j["elapsed_ms"] = r.elapsed_ms;
    j["pass"] = r.pass();
    j["gamma_witness"] = r.gamma_witness;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : r.perturbation.witness) edges.push_back({e.first, e.second});
    j["perturbation_witness"] = std::move(edges);
    j["instance"] = r.instance_dimacs;
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& r, int indent) { return to_json_value(r).dump(indent); }

std::string reports_to_json(std::span<const VerificationReport> reports, int indent) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json_value(r));
    return arr.dump(indent);
}

} // namespace bipdom

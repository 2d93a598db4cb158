#include "bipdom/perturb.hpp"

#include <algorithm>
#include <functional>

#include "bipdom/domset.hpp"
#include "bipdom/error.hpp"

namespace bipdom {

namespace {

using IndexPair = std::pair<std::size_t, std::size_t>;

enum class Edit { Remove, Add };

/// Ascending-cardinality search over candidate edge subsets, each size in
/// lexicographic index order. `succeeds` sees the edited adjacency and
/// returns true when the parameter moved in the required direction.
PerturbResult search_subsets(const Graph& g, const std::vector<IndexPair>& candidates, Edit edit, std::size_t max_k,
                             const std::function<bool(const Adjacency&)>& succeeds) {
    PerturbResult result;
    Adjacency adj = g.adjacency();
    const std::size_t limit = std::min(max_k, candidates.size());

    auto apply = [&](const IndexPair& e, bool forward) {
        if ((edit == Edit::Remove) == forward) adj.remove_edge(e.first, e.second);
        else adj.add_edge(e.first, e.second);
    };

    for (std::size_t k = 1; k <= limit; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            for (auto i : pick) apply(candidates[i], true);
            const bool ok = succeeds(adj);
            for (auto i : pick) apply(candidates[i], false);
            if (ok) {
                result.status = PerturbStatus::Found;
                result.value = k;
                result.searched_up_to = k;
                for (auto i : pick) result.witness.emplace_back(g.label(candidates[i].first), g.label(candidates[i].second));
                std::sort(result.witness.begin(), result.witness.end());
                return result;
            }
            // Next k-combination of 0..candidates.size()-1.
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        result.searched_up_to = k;
    }
    result.status = limit == candidates.size() ? PerturbStatus::Undefined : PerturbStatus::Exceeded;
    return result;
}

std::vector<IndexPair> complement_pairs(const Graph& g) {
    // Same order as complement_edges(g).
    std::vector<IndexPair> out;
    for (const auto& e : complement_edges(g)) out.emplace_back(g.index_of(e.first), g.index_of(e.second));
    return out;
}

void require_no_isolated(const Graph& g) {
    auto iso = isolated_vertices(g);
    if (!iso.empty()) throw Error(ErrorCode::IsolatedVertex, "vertex " + iso.front() + " is isolated");
}

} // namespace

std::size_t default_max_k(std::size_t candidate_count) { return candidate_count <= 12 ? candidate_count : 2; }

std::string describe(const PerturbResult& r) {
    switch (r.status) {
    case PerturbStatus::Found: return std::to_string(r.value);
    case PerturbStatus::Zero: return "0";
    case PerturbStatus::Undefined: return "undefined";
    case PerturbStatus::Exceeded: return ">" + std::to_string(r.searched_up_to);
    }
    return "?";
}

PerturbResult bondage_number(const Graph& g, std::optional<std::size_t> max_k) {
    if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "bondage number needs at least one edge");
    const auto gamma = minimum_dominating_set(g.adjacency(), DominationMode::Standard).value;
    auto r = search_subsets(g, g.edge_indices(), Edit::Remove, max_k.value_or(default_max_k(g.edge_count())),
                            [&](const Adjacency& adj) {
                                return !find_dominating_set_within(adj, DominationMode::Standard, gamma);
                            });
    r.base = gamma;
    return r;
}

PerturbResult total_bondage_number(const Graph& g, std::optional<std::size_t> max_k) {
    require_no_isolated(g);
    const auto gamma_t = minimum_dominating_set(g.adjacency(), DominationMode::Total).value;
    auto r = search_subsets(g, g.edge_indices(), Edit::Remove, max_k.value_or(default_max_k(g.edge_count())),
                            [&](const Adjacency& adj) {
                                if (adj.has_isolated_vertex()) return false;
                                return !find_dominating_set_within(adj, DominationMode::Total, gamma_t);
                            });
    r.base = gamma_t;
    return r;
}

PerturbResult reinforcement_number(const Graph& g, std::optional<std::size_t> max_k) {
    const auto gamma = minimum_dominating_set(g.adjacency(), DominationMode::Standard).value;
    if (gamma <= 1) {
        PerturbResult r;
        r.status = PerturbStatus::Zero;
        r.base = gamma;
        return r;
    }
    const auto candidates = complement_pairs(g);
    auto r = search_subsets(g, candidates, Edit::Add, max_k.value_or(default_max_k(candidates.size())),
                            [&](const Adjacency& adj) {
                                return find_dominating_set_within(adj, DominationMode::Standard, gamma - 1).has_value();
                            });
    r.base = gamma;
    return r;
}

PerturbResult total_reinforcement_number(const Graph& g, std::optional<std::size_t> max_k) {
    require_no_isolated(g);
    const auto gamma_t = minimum_dominating_set(g.adjacency(), DominationMode::Total).value;
    if (gamma_t <= 2) {
        PerturbResult r;
        r.status = PerturbStatus::Zero;
        r.base = gamma_t;
        return r;
    }
    const auto candidates = complement_pairs(g);
    auto r = search_subsets(g, candidates, Edit::Add, max_k.value_or(default_max_k(candidates.size())),
                            [&](const Adjacency& adj) {
                                return find_dominating_set_within(adj, DominationMode::Total, gamma_t - 1).has_value();
                            });
    r.base = gamma_t;
    return r;
}

} // namespace bipdom

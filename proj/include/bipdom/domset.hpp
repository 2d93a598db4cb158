#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bipdom/graph.hpp"

namespace bipdom {

enum class DominationMode {
    Standard, ///< every vertex outside D has a neighbor in D
    Total,    ///< every vertex has a neighbor in D
};

/// A domination-type number and one set attaining it.
struct DomResult {
    std::size_t value = 0;
    VertexSet witness;
};

bool is_dominating_set(const Graph& g, std::span<const Label> set);
bool is_total_dominating_set(const Graph& g, std::span<const Label> set);

DomResult domination_number(const Graph& g);
/// Throws IsolatedVertex.
DomResult total_domination_number(const Graph& g);

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

/// Every minimum (total) dominating set, sorted by vertex index sequence.
/// Throws IsolatedVertex (total only) and BudgetExceeded past `cap` sets.
std::vector<VertexSet> enumerate_minimum_sets(const Graph& g, bool total,
                                              std::size_t cap = kDefaultEnumerationCap);

// Index-level kernel. The perturbation search mutates adjacency in place and
// calls these directly, so no label maps are rebuilt per candidate.

bool dominates(const Adjacency& adj, DominationMode mode, const Bitset& set);

struct IndexDomResult {
    std::size_t value = 0;
    Bitset witness;
};

/// Minimum set under `mode`; in Total mode the adjacency must have no isolated vertex.
IndexDomResult minimum_dominating_set(const Adjacency& adj, DominationMode mode);

/// Some set of size <= max_size, or nullopt if none exists.
std::optional<Bitset> find_dominating_set_within(const Adjacency& adj, DominationMode mode, std::size_t max_size);

/// All sets of size <= max_size that dominate and were reached by the
/// search; when max_size equals the optimum this is exactly the set of
/// minimum sets. Throws BudgetExceeded past `cap`.
std::vector<Bitset> enumerate_dominating_sets_within(const Adjacency& adj, DominationMode mode,
                                                      std::size_t max_size, std::size_t cap);

} // namespace bipdom

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bipdom/graph.hpp"

namespace bipdom {

enum class PerturbStatus {
    Found,     ///< `value` edges realize the change; `witness` holds them
    Zero,      ///< reinforcement convention: the base value is already minimal
    Undefined, ///< no edge set of any size qualifies (total bondage on stars)
    Exceeded,  ///< nothing qualifies up to `searched_up_to`; the value is larger
};

struct PerturbResult {
    PerturbStatus status = PerturbStatus::Undefined;
    std::size_t value = 0;
    std::vector<Edge> witness;
    /// The unperturbed parameter (gamma or gamma_t).
    std::size_t base = 0;
    /// Largest edge-set size that was searched exhaustively.
    std::size_t searched_up_to = 0;

    bool found() const noexcept { return status == PerturbStatus::Found; }
    bool is_one() const noexcept { return found() && value == 1; }
};

/// "1", "0", "undefined", or ">k".
std::string describe(const PerturbResult& r);

/// b(G). Throws EmptyGraph when g has no edges.
PerturbResult bondage_number(const Graph& g, std::optional<std::size_t> max_k = std::nullopt);

/// b_t(G); edge sets whose removal isolates a vertex are skipped.
/// Throws IsolatedVertex.
PerturbResult total_bondage_number(const Graph& g, std::optional<std::size_t> max_k = std::nullopt);

/// r(G); Zero when gamma(G) <= 1.
PerturbResult reinforcement_number(const Graph& g, std::optional<std::size_t> max_k = std::nullopt);

/// r_t(G); Zero when gamma_t(G) <= 2. Throws IsolatedVertex.
PerturbResult total_reinforcement_number(const Graph& g, std::optional<std::size_t> max_k = std::nullopt);

/// Search depth used when the caller passes no bound: unbounded for up to
/// 12 candidate edges, 2 otherwise.
std::size_t default_max_k(std::size_t candidate_count);

} // namespace bipdom

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bipdom/bitset.hpp"

namespace bipdom {

/// Vertex identifier: nonempty, no whitespace, unique within a graph.
using Label = std::string;

/// Vertex labels, reported in graph vertex order.
using VertexSet = std::vector<Label>;

/// Undirected edge, normalized so that `first < second` lexicographically.
struct Edge {
    Label first;
    Label second;

    Edge() = default;
    Edge(Label a, Label b);

    auto operator<=>(const Edge&) const = default;
};

/// Dense-index adjacency rows; row i holds the open neighborhood of vertex i.
class Adjacency {
public:
    Adjacency() = default;
    explicit Adjacency(std::size_t n) : rows_(n, Bitset(n)) {}

    std::size_t size() const noexcept { return rows_.size(); }
    const Bitset& row(std::size_t i) const { return rows_[i]; }
    bool has_edge(std::size_t a, std::size_t b) const { return rows_[a].test(b); }

    void add_edge(std::size_t a, std::size_t b) {
        rows_[a].set(b);
        rows_[b].set(a);
    }
    void remove_edge(std::size_t a, std::size_t b) {
        rows_[a].reset(b);
        rows_[b].reset(a);
    }

    bool has_isolated_vertex() const {
        for (const auto& r : rows_)
            if (r.none()) return true;
        return false;
    }

private:
    std::vector<Bitset> rows_;
};

/// Immutable undirected simple graph over labeled vertices.
///
/// Vertex order is insertion order and survives every copy-producing
/// operation. Edges are kept as a sorted set of normalized pairs, so
/// `edges()` and `edge_indices()` list the same edges in the same order.
class Graph {
public:
    Graph() = default;

    /// Throws DuplicateLabel, InvalidLabel, UnknownEndpoint, SelfLoop, DuplicateEdge.
    static Graph from_edge_list(std::vector<Label> vertex_labels,
                                const std::vector<std::pair<Label, Label>>& edge_pairs);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Label>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edge_indices() const noexcept {
        return edge_indices_;
    }
    const Adjacency& adjacency() const noexcept { return adjacency_; }

    bool has_vertex(std::string_view label) const;
    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws UnknownVertex.
    std::size_t index_of(std::string_view label) const;
    const Label& label(std::size_t index) const { return vertices_[index]; }

    bool has_edge(std::string_view a, std::string_view b) const;

    /// Dense-index bitset of the given labels. Throws UnknownVertex.
    Bitset to_bitset(std::span<const Label> labels) const;
    /// Labels of the set bits, in vertex order.
    VertexSet to_labels(const Bitset& set) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void rebuild_edges_from_adjacency();

    std::vector<Label> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    Adjacency adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::pair<std::size_t, std::size_t>> edge_indices_;

    friend Graph with_adjacency(const Graph& base, Adjacency adjacency);
};

/// Copy of `base` with the same vertices and a replaced edge set.
Graph with_adjacency(const Graph& base, Adjacency adjacency);

VertexSet open_neighbors(const Graph& g, std::string_view v);
VertexSet closed_neighbors(const Graph& g, std::string_view v);

struct BipartiteResult {
    bool bipartite = false;
    /// Color (0 or 1) per vertex index, present iff bipartite.
    std::optional<std::vector<int>> coloring;
};

BipartiteResult is_bipartite(const Graph& g);

/// G - B. Throws UnknownEdge if some edge of B is not in g.
Graph remove_edges(const Graph& g, std::span<const Edge> removed);
/// G + R. Throws EdgeAlreadyPresent, SelfLoop, UnknownEndpoint.
Graph add_edges(const Graph& g, std::span<const Edge> added);

/// All non-adjacent distinct vertex pairs, normalized and sorted.
std::vector<Edge> complement_edges(const Graph& g);

VertexSet isolated_vertices(const Graph& g);

} // namespace bipdom

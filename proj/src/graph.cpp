#include "bipdom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "bipdom/error.hpp"

namespace bipdom {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidLabel: return "invalid-label";
    case ErrorCode::DuplicateLabel: return "duplicate-label";
    case ErrorCode::UnknownEndpoint: return "unknown-endpoint";
    case ErrorCode::UnknownVertex: return "unknown-vertex";
    case ErrorCode::UnknownEdge: return "unknown-edge";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::EdgeAlreadyPresent: return "edge-already-present";
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::ClauseArityError: return "clause-arity";
    case ErrorCode::TautologicalClause: return "tautological-clause";
    case ErrorCode::VariableOutOfRange: return "variable-out-of-range";
    case ErrorCode::PartialAssignment: return "partial-assignment";
    case ErrorCode::TooFewVariables: return "too-few-variables";
    case ErrorCode::IsolatedVertex: return "isolated-vertex";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::EmptyGraph: return "empty-graph";
    case ErrorCode::UnsatisfyingAssignment: return "unsatisfying-assignment";
    case ErrorCode::KindMismatch: return "kind-mismatch";
    }
    return "unknown";
}

Edge::Edge(Label a, Label b) {
    if (b < a) std::swap(a, b);
    first = std::move(a);
    second = std::move(b);
}

namespace {

void check_label(const Label& label) {
    if (label.empty()) throw Error(ErrorCode::InvalidLabel, "empty vertex label");
    for (unsigned char ch : label) {
        if (std::isspace(ch)) throw Error(ErrorCode::InvalidLabel, "vertex label contains whitespace: '" + label + "'");
    }
}

} // namespace

Graph Graph::from_edge_list(std::vector<Label> vertex_labels,
                            const std::vector<std::pair<Label, Label>>& edge_pairs) {
    Graph g;
    g.index_.reserve(vertex_labels.size());
    for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
        check_label(vertex_labels[i]);
        if (!g.index_.emplace(vertex_labels[i], i).second)
            throw Error(ErrorCode::DuplicateLabel, "duplicate vertex label: " + vertex_labels[i]);
    }
    g.vertices_ = std::move(vertex_labels);
    g.adjacency_ = Adjacency(g.vertices_.size());

    for (const auto& [a, b] : edge_pairs) {
        auto ia = g.find(a);
        auto ib = g.find(b);
        if (!ia || !ib)
            throw Error(ErrorCode::UnknownEndpoint, "edge endpoint not a vertex: " + (ia ? b : a));
        if (*ia == *ib) throw Error(ErrorCode::SelfLoop, "self-loop at " + a);
        if (g.adjacency_.has_edge(*ia, *ib))
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + a + " " + b);
        g.adjacency_.add_edge(*ia, *ib);
    }
    g.rebuild_edges_from_adjacency();
    return g;
}

void Graph::rebuild_edges_from_adjacency() {
    edges_.clear();
    edge_indices_.clear();
    std::vector<std::pair<Edge, std::pair<std::size_t, std::size_t>>> tmp;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        adjacency_.row(i).for_each([&](std::size_t j) {
            if (j > i) {
                Edge e(vertices_[i], vertices_[j]);
                std::size_t a = index_.at(e.first);
                std::size_t b = index_.at(e.second);
                tmp.emplace_back(std::move(e), std::make_pair(a, b));
            }
        });
    }
    std::sort(tmp.begin(), tmp.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    edges_.reserve(tmp.size());
    edge_indices_.reserve(tmp.size());
    for (auto& [e, idx] : tmp) {
        edges_.push_back(std::move(e));
        edge_indices_.push_back(idx);
    }
}

Graph with_adjacency(const Graph& base, Adjacency adjacency) {
    Graph g;
    g.vertices_ = base.vertices_;
    g.index_ = base.index_;
    g.adjacency_ = std::move(adjacency);
    g.rebuild_edges_from_adjacency();
    return g;
}

bool Graph::has_vertex(std::string_view label) const { return find(label).has_value(); }

std::optional<std::size_t> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw Error(ErrorCode::UnknownVertex, "unknown vertex: " + std::string(label));
    return *i;
}

bool Graph::has_edge(std::string_view a, std::string_view b) const {
    auto ia = find(a);
    auto ib = find(b);
    return ia && ib && adjacency_.has_edge(*ia, *ib);
}

Bitset Graph::to_bitset(std::span<const Label> labels) const {
    Bitset s(vertices_.size());
    for (const auto& l : labels) s.set(index_of(l));
    return s;
}

VertexSet Graph::to_labels(const Bitset& set) const {
    VertexSet out;
    set.for_each([&](std::size_t i) { out.push_back(vertices_[i]); });
    return out;
}

VertexSet open_neighbors(const Graph& g, std::string_view v) {
    return g.to_labels(g.adjacency().row(g.index_of(v)));
}

VertexSet closed_neighbors(const Graph& g, std::string_view v) {
    std::size_t i = g.index_of(v);
    Bitset s = g.adjacency().row(i);
    s.set(i);
    return g.to_labels(s);
}

BipartiteResult is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<std::size_t> queue;
        queue.push(start);
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop();
            bool odd_cycle = false;
            g.adjacency().row(v).for_each([&](std::size_t w) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    odd_cycle = true;
                }
            });
            if (odd_cycle) return {};
        }
    }
    return {true, std::move(color)};
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
    Adjacency adj = g.adjacency();
    for (const auto& e : removed) {
        auto a = g.find(e.first);
        auto b = g.find(e.second);
        if (!a || !b || !adj.has_edge(*a, *b))
            throw Error(ErrorCode::UnknownEdge, "edge not in graph: " + e.first + " " + e.second);
        adj.remove_edge(*a, *b);
    }
    return with_adjacency(g, std::move(adj));
}

Graph add_edges(const Graph& g, std::span<const Edge> added) {
    Adjacency adj = g.adjacency();
    for (const auto& e : added) {
        auto a = g.find(e.first);
        auto b = g.find(e.second);
        if (!a || !b)
            throw Error(ErrorCode::UnknownEndpoint, "edge endpoint not a vertex: " + (a ? e.second : e.first));
        if (*a == *b) throw Error(ErrorCode::SelfLoop, "self-loop at " + e.first);
        if (adj.has_edge(*a, *b))
            throw Error(ErrorCode::EdgeAlreadyPresent, "edge already present: " + e.first + " " + e.second);
        adj.add_edge(*a, *b);
    }
    return with_adjacency(g, std::move(adj));
}

std::vector<Edge> complement_edges(const Graph& g) {
    std::vector<Edge> out;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacency().has_edge(i, j)) out.emplace_back(g.label(i), g.label(j));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (g.adjacency().row(i).none()) out.push_back(g.label(i));
    return out;
}

} // namespace bipdom

#ifndef CYCLEQUIV_DIRECTED_GRAPH_HPP
#define CYCLEQUIV_DIRECTED_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace cyclequiv {

using Vertex = int;

/// Directed edge `from -> to`.
struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph over vertices 0..n-1, possibly cyclic. Both i -> j and j -> i
/// may be present; self-loops and duplicate arcs are rejected at construction.
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(int n);
    /// Throws std::invalid_argument on out-of-range endpoints, self-loops or duplicates.
    DirectedGraph(int n, std::span<const Edge> edges);

    int size() const { return static_cast<int>(parents_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(Vertex from, Vertex to) const;
    /// True iff there is an arc in either direction.
    bool adjacent(Vertex a, Vertex b) const { return has_edge(a, b) || has_edge(b, a); }

    /// Sorted ascending.
    const std::vector<Vertex>& parents(Vertex v) const { return parents_[v]; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }

    /// All arcs, sorted by (from, to).
    std::vector<Edge> edges() const;

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
        return a.children_ == b.children_;
    }

private:
    std::vector<std::vector<Vertex>> parents_;
    std::vector<std::vector<Vertex>> children_;
    std::size_t edge_count_ = 0;
};

}  // namespace cyclequiv

#endif  // CYCLEQUIV_DIRECTED_GRAPH_HPP

#ifndef CYCLEQUIV_MIXED_GRAPH_HPP
#define CYCLEQUIV_MIXED_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cyclequiv/directed_graph.hpp"

namespace cyclequiv {

enum class EdgeMark : std::uint8_t { Tail, Arrow, Circle };

char mark_symbol(EdgeMark m);

/// Ordered triple <x, z, y>. For collider-style triples the outer pair is kept
/// canonical (x < y), see `Triple::collider`.
struct Triple {
    Vertex x = 0;
    Vertex z = 0;
    Vertex y = 0;

    static Triple collider(Vertex a, Vertex mid, Vertex b) {
        return a < b ? Triple{a, mid, b} : Triple{b, mid, a};
    }

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Edge record with i < j.
struct MixedEdge {
    Vertex i = 0;
    EdgeMark at_i = EdgeMark::Circle;
    Vertex j = 0;
    EdgeMark at_j = EdgeMark::Circle;

    friend bool operator==(const MixedEdge&, const MixedEdge&) = default;
};

/// Graph with at most one edge per unordered pair and one mark per endpoint,
/// plus a set of dashed-underlined collider triples. Shared representation for
/// CMAGs (tail/arrow only) and CPAGs (circles allowed).
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int n);

    int size() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex a, Vertex b) const { return slot(a, b) != 0; }
    /// Mark at endpoint `at` of the edge {at, other}; empty if not adjacent.
    std::optional<EdgeMark> mark_at(Vertex at, Vertex other) const;

    /// a -> b: tail at a, arrow at b.
    bool is_arc(Vertex a, Vertex b) const;
    /// a -* b: tail at a, any mark at b.
    bool has_tail_at(Vertex a, Vertex b) const;
    bool is_undirected(Vertex a, Vertex b) const;

    /// Adds the edge, or overwrites both marks if it already exists.
    void set_edge(Vertex a, EdgeMark at_a, Vertex b, EdgeMark at_b);
    /// Requires an existing edge; throws std::invalid_argument otherwise.
    void set_mark(Vertex at, Vertex other, EdgeMark m);

    /// Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    /// Stored as Triple::collider(x, z, y). Validation of the collider shape is
    /// left to callers (see `underline_is_valid`).
    void add_underline(Vertex x, Vertex z, Vertex y);
    bool has_underline(Vertex x, Vertex z, Vertex y) const;
    const std::set<Triple>& underlines() const { return underlines_; }

    /// True iff x *-> z <-* y with x, y nonadjacent.
    bool is_unshielded_collider(Vertex x, Vertex z, Vertex y) const;
    bool underline_is_valid(const Triple& t) const;

    /// All edges with i < j, sorted by (i, j).
    std::vector<MixedEdge> edges() const;

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.n_ == b.n_ && a.marks_ == b.marks_ && a.underlines_ == b.underlines_;
    }

private:
    std::uint8_t slot(Vertex at, Vertex other) const {
        return marks_[static_cast<std::size_t>(at) * n_ + other];
    }

    int n_ = 0;
    // 0 = no edge, otherwise 1 + EdgeMark at the row vertex.
    std::vector<std::uint8_t> marks_;
    std::vector<std::vector<Vertex>> adj_;
    std::set<Triple> underlines_;
    std::size_t edge_count_ = 0;
};

/// True iff same size, identical edges with identical endpoint marks and identical
/// underline triples. Vertex labels are significant.
bool pag_equal(const MixedGraph& p1, const MixedGraph& p2);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_MIXED_GRAPH_HPP

#include "cyclequiv/mixed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclequiv {

char mark_symbol(EdgeMark m) {
    switch (m) {
        case EdgeMark::Tail:
            return 't';
        case EdgeMark::Arrow:
            return 'a';
        case EdgeMark::Circle:
            return 'o';
    }
    return '?';
}

MixedGraph::MixedGraph(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    marks_.assign(static_cast<std::size_t>(n) * n, 0);
    adj_.resize(n);
}

std::optional<EdgeMark> MixedGraph::mark_at(Vertex at, Vertex other) const {
    const auto s = slot(at, other);
    if (s == 0) {
        return std::nullopt;
    }
    return static_cast<EdgeMark>(s - 1);
}

bool MixedGraph::is_arc(Vertex a, Vertex b) const {
    return slot(a, b) == 1 + static_cast<int>(EdgeMark::Tail) &&
           slot(b, a) == 1 + static_cast<int>(EdgeMark::Arrow);
}

bool MixedGraph::has_tail_at(Vertex a, Vertex b) const {
    return slot(a, b) == 1 + static_cast<int>(EdgeMark::Tail);
}

bool MixedGraph::is_undirected(Vertex a, Vertex b) const {
    return slot(a, b) == 1 + static_cast<int>(EdgeMark::Tail) &&
           slot(b, a) == 1 + static_cast<int>(EdgeMark::Tail);
}

void MixedGraph::set_edge(Vertex a, EdgeMark at_a, Vertex b, EdgeMark at_b) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) {
        throw std::invalid_argument("invalid edge " + std::to_string(a) + " - " +
                                    std::to_string(b));
    }
    if (!adjacent(a, b)) {
        adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
        adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
        ++edge_count_;
    }
    marks_[static_cast<std::size_t>(a) * n_ + b] = 1 + static_cast<std::uint8_t>(at_a);
    marks_[static_cast<std::size_t>(b) * n_ + a] = 1 + static_cast<std::uint8_t>(at_b);
}

void MixedGraph::set_mark(Vertex at, Vertex other, EdgeMark m) {
    if (!adjacent(at, other)) {
        throw std::invalid_argument("no edge " + std::to_string(at) + " - " +
                                    std::to_string(other));
    }
    marks_[static_cast<std::size_t>(at) * n_ + other] = 1 + static_cast<std::uint8_t>(m);
}

void MixedGraph::add_underline(Vertex x, Vertex z, Vertex y) {
    underlines_.insert(Triple::collider(x, z, y));
}

bool MixedGraph::has_underline(Vertex x, Vertex z, Vertex y) const {
    return underlines_.contains(Triple::collider(x, z, y));
}

bool MixedGraph::is_unshielded_collider(Vertex x, Vertex z, Vertex y) const {
    return x != y && !adjacent(x, y) && mark_at(z, x) == EdgeMark::Arrow &&
           mark_at(z, y) == EdgeMark::Arrow;
}

bool MixedGraph::underline_is_valid(const Triple& t) const {
    const auto in_range = [this](Vertex v) { return v >= 0 && v < n_; };
    return in_range(t.x) && in_range(t.z) && in_range(t.y) && t.x < t.y && t.z != t.x &&
           t.z != t.y && is_unshielded_collider(t.x, t.z, t.y);
}

std::vector<MixedEdge> MixedGraph::edges() const {
    std::vector<MixedEdge> out;
    out.reserve(edge_count_);
    for (Vertex i = 0; i < n_; ++i) {
        for (Vertex j : adj_[i]) {
            if (j > i) {
                out.push_back({i, *mark_at(i, j), j, *mark_at(j, i)});
            }
        }
    }
    return out;
}

bool pag_equal(const MixedGraph& p1, const MixedGraph& p2) { return p1 == p2; }

}  // namespace cyclequiv

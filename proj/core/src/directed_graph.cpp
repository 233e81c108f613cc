#include "cyclequiv/directed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclequiv {

DirectedGraph::DirectedGraph(int n) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    parents_.resize(n);
    children_.resize(n);
}

DirectedGraph::DirectedGraph(int n, std::span<const Edge> edges) : DirectedGraph(n) {
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
            throw std::invalid_argument("edge " + std::to_string(e.from) + " -> " +
                                        std::to_string(e.to) + " out of range for n=" +
                                        std::to_string(n));
        }
        if (e.from == e.to) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.from));
        }
        children_[e.from].push_back(e.to);
        parents_[e.to].push_back(e.from);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(children_[v].begin(), children_[v].end());
        std::sort(parents_[v].begin(), parents_[v].end());
        if (std::adjacent_find(children_[v].begin(), children_[v].end()) != children_[v].end()) {
            throw std::invalid_argument("duplicate edge from vertex " + std::to_string(v));
        }
    }
    edge_count_ = edges.size();
}

bool DirectedGraph::has_edge(Vertex from, Vertex to) const {
    const auto& ch = children_[from];
    return std::binary_search(ch.begin(), ch.end(), to);
}

std::vector<Edge> DirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int v = 0; v < size(); ++v) {
        for (Vertex c : children_[v]) {
            out.push_back({v, c});
        }
    }
    return out;
}

}  // namespace cyclequiv

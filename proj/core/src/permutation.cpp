#include "cyclequiv/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclequiv {

namespace {

void check_size(int graph_n, const NodePermutation& p) {
    if (graph_n != p.size()) {
        throw std::invalid_argument("permutation size " + std::to_string(p.size()) +
                                    " does not match graph size " + std::to_string(graph_n));
    }
}

}  // namespace

NodePermutation::NodePermutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Vertex v : image_) {
        if (v < 0 || v >= size() || seen[v]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[v] = true;
    }
}

NodePermutation NodePermutation::identity(int n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 0);
    return NodePermutation(std::move(image));
}

NodePermutation NodePermutation::inverse() const {
    std::vector<Vertex> inv(image_.size());
    for (int v = 0; v < size(); ++v) {
        inv[image_[v]] = v;
    }
    return NodePermutation(std::move(inv));
}

DirectedGraph apply_permutation(const DirectedGraph& g, const NodePermutation& p) {
    check_size(g.size(), p);
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        e = {p(e.from), p(e.to)};
    }
    return DirectedGraph(g.size(), edges);
}

MixedGraph apply_permutation(const MixedGraph& g, const NodePermutation& p) {
    check_size(g.size(), p);
    MixedGraph out(g.size());
    for (const MixedEdge& e : g.edges()) {
        out.set_edge(p(e.i), e.at_i, p(e.j), e.at_j);
    }
    for (const Triple& t : g.underlines()) {
        out.add_underline(p(t.x), p(t.z), p(t.y));
    }
    return out;
}

}  // namespace cyclequiv

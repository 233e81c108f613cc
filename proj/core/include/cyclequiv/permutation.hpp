#ifndef CYCLEQUIV_PERMUTATION_HPP
#define CYCLEQUIV_PERMUTATION_HPP

#include <vector>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"

namespace cyclequiv {

/// Bijection on 0..n-1; vertex v is relabelled to `(*this)(v)`.
class NodePermutation {
public:
    NodePermutation() = default;
    /// Throws std::invalid_argument unless `image` is a permutation of 0..n-1.
    explicit NodePermutation(std::vector<Vertex> image);

    static NodePermutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex v) const { return image_[v]; }
    const std::vector<Vertex>& image() const { return image_; }
    NodePermutation inverse() const;

    friend bool operator==(const NodePermutation&, const NodePermutation&) = default;

private:
    std::vector<Vertex> image_;
};

DirectedGraph apply_permutation(const DirectedGraph& g, const NodePermutation& p);
/// Underline triples are mapped componentwise and re-canonicalized.
MixedGraph apply_permutation(const MixedGraph& g, const NodePermutation& p);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_PERMUTATION_HPP

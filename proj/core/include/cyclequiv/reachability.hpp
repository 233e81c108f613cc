#ifndef CYCLEQUIV_REACHABILITY_HPP
#define CYCLEQUIV_REACHABILITY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"

namespace cyclequiv {

/// Strongly connected components plus the reflexive ancestor relation of a
/// directed graph. Descendant sets are stored once per component as dense bit
/// rows, so `is_ancestor` is constant time.
class AncestryInfo {
public:
    AncestryInfo() = default;

    int size() const { return static_cast<int>(scc_id_.size()); }
    int scc_count() const { return static_cast<int>(scc_members_.size()); }

    /// Component ids are in reverse topological order: a component's
    /// descendants all have smaller ids.
    int scc_of(Vertex v) const { return scc_id_[v]; }
    /// Sorted ascending.
    const std::vector<Vertex>& scc_members(int component) const {
        return scc_members_[component];
    }
    int scc_size_of(Vertex v) const {
        return static_cast<int>(scc_members_[scc_id_[v]].size());
    }
    bool same_scc(Vertex a, Vertex b) const { return scc_id_[a] == scc_id_[b]; }

    /// Reflexive: every vertex is its own ancestor.
    bool is_ancestor(Vertex a, Vertex b) const {
        const std::uint64_t* row = desc_row(scc_id_[a]);
        return (row[b >> 6] >> (b & 63)) & 1U;
    }

    /// True iff `v` is an ancestor of at least one member of `targets`.
    bool is_ancestor_of_any(Vertex v, std::span<const Vertex> targets) const;
    /// Sorted ascending, including `v`.
    std::vector<Vertex> descendants(Vertex v) const;

    friend AncestryInfo compute_ancestry(const DirectedGraph& g);

private:
    const std::uint64_t* desc_row(int component) const {
        return desc_.data() + static_cast<std::size_t>(component) * words_;
    }

    std::vector<int> scc_id_;
    std::vector<std::vector<Vertex>> scc_members_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> desc_;
};

/// Tarjan's SCC algorithm, accumulating descendant rows as each component is
/// closed. O(n + |E|) for the partition, O(|E| * n / 64) for the rows.
AncestryInfo compute_ancestry(const DirectedGraph& g);

/// True iff some vertex of `targets` is reachable from `src` along edges of `m`
/// (marks ignored) whose endpoints both lie in `allowed`. Throws
/// std::invalid_argument if `src` is not in `allowed`.
bool connected_in_subgraph(const MixedGraph& m, std::span<const Vertex> allowed, Vertex src,
                           std::span<const Vertex> targets);

/// Greedy shortcut of a path in `m`: from each kept vertex, jump to the
/// farthest later vertex adjacent to it. The result keeps both endpoints and
/// has no chords. With `require_ancestral` the input must be ancestral
/// (tail at each earlier endpoint) and only tail-first shortcuts are taken; in
/// a CMAG this still yields an uncovered path. Throws std::invalid_argument if
/// `path` is not a path in `m`.
std::vector<Vertex> uncovered_subpath(const MixedGraph& m, std::span<const Vertex> path,
                                      bool require_ancestral);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_REACHABILITY_HPP

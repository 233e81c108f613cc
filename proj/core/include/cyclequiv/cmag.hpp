#ifndef CYCLEQUIV_CMAG_HPP
#define CYCLEQUIV_CMAG_HPP

#include <set>
#include <vector>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"
#include "cyclequiv/reachability.hpp"
#include "cyclequiv/stage_timer.hpp"

namespace cyclequiv {

/// Cyclic maximal ancestral graph of a directed graph.
///
/// - {x, y} adjacent iff x and y are adjacent or virtually adjacent in `source`;
/// - tail at x on the edge to y iff x is an ancestor of y, arrowhead otherwise,
///   so edges inside one SCC are undirected and all others are arcs;
/// - unshielded colliders x -> z <- y whose z is not a descendant of a common
///   child of x and y are underlined (virtual v-structures).
struct Cmag {
    DirectedGraph source;
    AncestryInfo info;
    MixedGraph graph;

    const std::set<Triple>& virtual_v_structures() const { return graph.underlines(); }
};

Cmag build_cmag(const DirectedGraph& g, StageTimings* timings = nullptr);

/// Underlined triples of the CMAG (canonical x < y).
const std::set<Triple>& virtual_v_structures(const Cmag& m);

/// Unshielded colliders x -> z <- y that are not underlined (canonical x < y).
std::vector<Triple> v_structures(const Cmag& m);

/// Parents of `v` in the CMAG: vertices w with w -> v.
std::vector<Vertex> cmag_parents(const MixedGraph& m, Vertex v);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_CMAG_HPP

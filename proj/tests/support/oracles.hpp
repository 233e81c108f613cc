#ifndef CYCLEQUIV_TESTS_ORACLES_HPP
#define CYCLEQUIV_TESTS_ORACLES_HPP

// Slow, independent reference implementations used only by tests. None of
// them share code with the library beyond the graph containers.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"

namespace cyclequiv::oracle {

/// reach[a][b] != 0 iff b is reachable from a (reflexive), by BFS from every vertex.
std::vector<std::vector<char>> transitive_closure(const DirectedGraph& g);

/// d-connection by enumerating simple paths. Each step may use either arc
/// between consecutive vertices, so both arcs of a 2-cycle are tried.
bool d_connected_by_paths(const DirectedGraph& g, Vertex x, Vertex y, std::span<const Vertex> z);

/// Some subset of the other vertices d-separates a and b (all subsets tried).
bool separable(const DirectedGraph& g, Vertex a, Vertex b);

/// Every (x, y, Z) d-connection bit, in a fixed order, computed by path enumeration.
std::vector<char> separation_signature(const DirectedGraph& g);

/// DFS over all simple paths inside `allowed`.
bool connected_by_paths(const MixedGraph& m, std::span<const Vertex> allowed, Vertex src,
                        std::span<const Vertex> targets);

/// Quadruples <x, z, z_end, y> found by enumerating all paths
/// x -> z - .. - z_end <- y with every interior vertex in SCC(z) and checking
/// that no two non-consecutive path vertices are adjacent.
std::vector<std::array<Vertex, 4>> u_structures_by_paths(const MixedGraph& cmag,
                                                         const std::vector<int>& scc_id);

/// Arcs of a uniformly random graph: each ordered pair independently with probability p.
DirectedGraph gilbert_graph(int n, double p, std::mt19937_64& rng);

/// Every directed graph on n vertices, indexed by a bitmask over the n(n-1) ordered pairs.
DirectedGraph graph_from_mask(int n, std::uint64_t mask);

}  // namespace cyclequiv::oracle

#endif  // CYCLEQUIV_TESTS_ORACLES_HPP

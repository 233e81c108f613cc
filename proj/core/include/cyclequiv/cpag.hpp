#ifndef CYCLEQUIV_CPAG_HPP
#define CYCLEQUIV_CPAG_HPP

#include <cstdint>
#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cyclequiv/cmag.hpp"
#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"
#include "cyclequiv/stage_timer.hpp"

namespace cyclequiv {

/// Why a CPAG mark is not a circle. Diagnostics only; not part of CPAG equality.
enum class MarkSource : std::uint8_t {
    Skeleton,           // still a circle
    VStructure,
    VirtualVStructure,
    UStructure,
    Rule4Adjacent,      // edge to another virtual collider triple
    Rule4Path,          // end of an uncovered ancestral path from a virtual collider
};

const char* to_string(MarkSource s);

/// Virtual collider triples of a CMAG: underlined colliders plus the triples
/// <x, z, y> where z is the first or last vertex inside an SCC on some
/// u-structure between x and y. Stored with x < y.
class VirtualColliderIndex {
public:
    static constexpr std::uint8_t from_virtual_v_structure = 1;
    static constexpr std::uint8_t from_u_structure = 2;

    void add(Vertex x, Vertex z, Vertex y, std::uint8_t flag);

    bool contains(Vertex x, Vertex z, Vertex y) const;
    /// Bitwise-or of the flags above; 0 if absent.
    std::uint8_t flags(Vertex x, Vertex z, Vertex y) const;
    /// Colliders sharing the outer pair {x, y}, sorted.
    std::span<const Vertex> colliders(Vertex x, Vertex y) const;

    std::size_t size() const { return flags_.size(); }
    std::vector<Triple> triples() const;

    friend bool operator==(const VirtualColliderIndex& a, const VirtualColliderIndex& b) {
        return a.triples() == b.triples();
    }

private:
    std::map<Triple, std::uint8_t> flags_;
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> by_pair_;
};

/// Vertices outside SCC(z) with an arc into SCC(z), not adjacent to x or z.
std::vector<Vertex> u_structure_candidates(const Cmag& m, Vertex x, Vertex z);

/// True iff x -> z is the first edge of a u-structure <x, z, z', y> for some
/// y in `candidates`: x reaches a candidate through z and members of SCC(z)
/// not adjacent to x. Requires x -> z in the CMAG, |SCC(z)| >= 2 and
/// `candidates` within `u_structure_candidates(m, x, z)`; throws
/// std::invalid_argument otherwise.
bool edge_in_u_structure(const Cmag& m, Vertex x, Vertex z, std::span<const Vertex> candidates);

/// Uncovered path x -> z - .. - z_end <- y whose interior lies in SCC(z).
struct UStructure {
    Vertex x = 0;
    Vertex z = 0;
    Vertex z_end = 0;
    Vertex y = 0;

    friend auto operator<=>(const UStructure&, const UStructure&) = default;
};

/// Every u-structure of the CMAG, both orientations, sorted. Enumerates all
/// quadruples; intended for inspection and small graphs.
std::vector<UStructure> u_structures(const Cmag& m);

VirtualColliderIndex virtual_collider_triples(const Cmag& m);

struct CpagOptions {
    /// Only consider path-clause endpoints that lie on a cycle. Never changes
    /// the result; it prunes path searches.
    bool cycle_filter = true;
};

struct Cpag {
    MixedGraph graph;
    std::vector<MarkSource> provenance;  // indexed at * n + other

    MarkSource source_of(Vertex at, Vertex other) const {
        return provenance[static_cast<std::size_t>(at) * graph.size() + other];
    }
};

Cpag build_cpag(const Cmag& m, const CpagOptions& options = {}, StageTimings* timings = nullptr);
Cpag build_cpag(const DirectedGraph& g, const CpagOptions& options = {},
                StageTimings* timings = nullptr);

/// Direct comparison of two CMAGs by skeleton, v-structures, virtual collider
/// triples and ancestry between virtual collider triples and virtual
/// v-structures on the same outer pair. Throws std::invalid_argument on size
/// mismatch.
bool cet_equivalent(const Cmag& m1, const Cmag& m2);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_CPAG_HPP

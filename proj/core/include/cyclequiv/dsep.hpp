#ifndef CYCLEQUIV_DSEP_HPP
#define CYCLEQUIV_DSEP_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/reachability.hpp"

namespace cyclequiv {

// Ground-truth d-separation machinery. Everything here is exponential or
// quadratic per query and meant for verification, not for the CPAG pipeline.

/// Raised when an exhaustive routine is asked to run above its vertex cap.
class TooLargeError : public std::runtime_error {
public:
    TooLargeError(int n, int cap);
};

inline constexpr int default_bruteforce_cap = 12;

/// Repeated d-connection queries against one graph. The conditioning set can be
/// replaced or toggled one vertex at a time; `an(Z)` is maintained incrementally.
class SeparationQuery {
public:
    SeparationQuery(const DirectedGraph& g, const AncestryInfo& info);

    void condition_on(std::span<const Vertex> z);
    void toggle(Vertex v);
    bool conditioned(Vertex v) const { return in_z_[v] != 0; }

    /// Marks every vertex reachable from `x` by a d-connecting route given the
    /// current conditioning set. `x` must not be conditioned on.
    const std::vector<char>& reachable_from(Vertex x);
    bool d_connected(Vertex x, Vertex y);

private:
    const DirectedGraph* g_;
    const AncestryInfo* info_;
    std::vector<char> in_z_;
    std::vector<int> anc_count_;  // number of conditioned vertices v is an ancestor of
    std::vector<char> reached_;
    std::vector<char> seen_;  // indexed by 2 * v + direction
    std::vector<int> queue_;
};

/// Edge-state reachability: colliders pass iff they are ancestors of `z`,
/// noncolliders iff they are not in `z`. Throws std::invalid_argument if
/// x == y, or x or y is in `z`.
bool d_connected(const DirectedGraph& g, Vertex x, Vertex y, std::span<const Vertex> z);
bool d_connected(const DirectedGraph& g, const AncestryInfo& info, Vertex x, Vertex y,
                 std::span<const Vertex> z);

/// Compares every separation statement of the two graphs, Θ(n · 2^n) reachability
/// passes per graph. Throws std::invalid_argument on size mismatch and
/// TooLargeError above `max_n`.
bool markov_equivalent_bruteforce(const DirectedGraph& g1, const DirectedGraph& g2,
                                  int max_n = default_bruteforce_cap);

/// No edge between a and b, and a common child that is an ancestor of a or b.
bool virtually_adjacent(const DirectedGraph& g, Vertex a, Vertex b, const AncestryInfo& info);
/// Adjacent or virtually adjacent.
bool itinerary_adjacent(const DirectedGraph& g, Vertex a, Vertex b, const AncestryInfo& info);

enum class TripleKind { NotItinerary, Conductor, PerfectNonconductor, ImperfectNonconductor };

const char* to_string(TripleKind kind);

struct TripleClass {
    TripleKind kind = TripleKind::NotItinerary;
    bool shielded = false;

    friend bool operator==(const TripleClass&, const TripleClass&) = default;
};

TripleClass classify_triple(const DirectedGraph& g, Vertex a, Vertex b, Vertex c,
                            const AncestryInfo& info);

/// Two end triples of an uncovered itinerary whose interior vertices are mutual
/// ancestors but ancestors of neither endpoint.
struct MeConductorPair {
    std::array<Vertex, 3> first{};
    std::array<Vertex, 3> last{};
    std::vector<Vertex> itinerary;

    friend auto operator<=>(const MeConductorPair&, const MeConductorPair&) = default;
};

/// Exhaustive search over uncovered itineraries; result sorted. Throws
/// TooLargeError above `max_n`.
std::vector<MeConductorPair> find_me_conductor_pairs(const DirectedGraph& g,
                                                     const AncestryInfo& info,
                                                     int max_n = default_bruteforce_cap);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_DSEP_HPP

#include "cyclequiv/cpag.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cyclequiv/reachability.hpp"

namespace cyclequiv {

const char* to_string(MarkSource s) {
    switch (s) {
        case MarkSource::Skeleton:
            return "skeleton";
        case MarkSource::VStructure:
            return "v-structure";
        case MarkSource::VirtualVStructure:
            return "virtual-v-structure";
        case MarkSource::UStructure:
            return "u-structure";
        case MarkSource::Rule4Adjacent:
            return "rule4-adjacent";
        case MarkSource::Rule4Path:
            return "rule4-path";
    }
    return "?";
}

void VirtualColliderIndex::add(Vertex x, Vertex z, Vertex y, std::uint8_t flag) {
    const Triple t = Triple::collider(x, z, y);
    auto [it, inserted] = flags_.try_emplace(t, 0);
    it->second |= flag;
    if (inserted) {
        auto& list = by_pair_[{t.x, t.y}];
        list.insert(std::lower_bound(list.begin(), list.end(), t.z), t.z);
    }
}

bool VirtualColliderIndex::contains(Vertex x, Vertex z, Vertex y) const {
    return flags_.contains(Triple::collider(x, z, y));
}

std::uint8_t VirtualColliderIndex::flags(Vertex x, Vertex z, Vertex y) const {
    const auto it = flags_.find(Triple::collider(x, z, y));
    return it == flags_.end() ? 0 : it->second;
}

std::span<const Vertex> VirtualColliderIndex::colliders(Vertex x, Vertex y) const {
    const auto it = by_pair_.find(x < y ? std::pair{x, y} : std::pair{y, x});
    if (it == by_pair_.end()) {
        return {};
    }
    return it->second;
}

std::vector<Triple> VirtualColliderIndex::triples() const {
    std::vector<Triple> out;
    out.reserve(flags_.size());
    for (const auto& [t, f] : flags_) {
        out.push_back(t);
    }
    return out;
}

namespace {

// All y such that <x, z, z', y> is a u-structure for some z'. Breadth-first
// from z over SCC(z) minus the neighbours of x; a partner is any vertex with
// an arc into a visited member that is adjacent to neither x nor z.
std::vector<Vertex> u_structure_partners(const Cmag& m, Vertex x, Vertex z,
                                         std::vector<char>& seen) {
    const MixedGraph& g = m.graph;
    std::vector<Vertex> partners;
    std::vector<Vertex> queue{z};
    seen[z] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (m.info.same_scc(w, z)) {
                if (!seen[w] && !g.adjacent(x, w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            } else if (w != x && g.is_arc(w, v) && !g.adjacent(w, x) && !g.adjacent(w, z)) {
                partners.push_back(w);
            }
        }
    }
    for (Vertex v : queue) {
        seen[v] = 0;
    }
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    return partners;
}

// Builds the index; `first_edges` receives every arc x -> z that starts a u-structure.
VirtualColliderIndex build_index(const Cmag& m, std::vector<std::pair<Vertex, Vertex>>* first_edges) {
    VirtualColliderIndex index;
    for (const Triple& t : m.graph.underlines()) {
        index.add(t.x, t.z, t.y, VirtualColliderIndex::from_virtual_v_structure);
    }
    std::vector<char> seen(m.graph.size(), 0);
    for (Vertex z = 0; z < m.graph.size(); ++z) {
        if (m.info.scc_size_of(z) < 2) {
            continue;
        }
        for (Vertex x : m.graph.neighbors(z)) {
            if (!m.graph.is_arc(x, z)) {
                continue;
            }
            const std::vector<Vertex> partners = u_structure_partners(m, x, z, seen);
            for (Vertex y : partners) {
                index.add(x, z, y, VirtualColliderIndex::from_u_structure);
            }
            if (!partners.empty() && first_edges != nullptr) {
                first_edges->emplace_back(x, z);
            }
        }
    }
    return index;
}

}  // namespace

std::vector<Vertex> u_structure_candidates(const Cmag& m, Vertex x, Vertex z) {
    std::vector<Vertex> out;
    const auto& members = m.info.scc_members(m.info.scc_of(z));
    for (Vertex s : members) {
        for (Vertex w : m.graph.neighbors(s)) {
            if (!m.info.same_scc(w, z) && m.graph.is_arc(w, s) && w != x &&
                !m.graph.adjacent(w, x) && !m.graph.adjacent(w, z)) {
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool edge_in_u_structure(const Cmag& m, Vertex x, Vertex z, std::span<const Vertex> candidates) {
    const int n = m.graph.size();
    if (x < 0 || x >= n || z < 0 || z >= n || !m.graph.is_arc(x, z)) {
        throw std::invalid_argument("edge_in_u_structure requires an arc x -> z");
    }
    if (m.info.scc_size_of(z) < 2) {
        throw std::invalid_argument("edge_in_u_structure requires z on a cycle");
    }
    const std::vector<Vertex> valid = u_structure_candidates(m, x, z);
    for (Vertex y : candidates) {
        if (!std::binary_search(valid.begin(), valid.end(), y)) {
            throw std::invalid_argument("candidate " + std::to_string(y) +
                                        " is not a non-adjacent parent of SCC(z)");
        }
    }
    std::vector<Vertex> allowed{x, z};
    for (Vertex s : m.info.scc_members(m.info.scc_of(z))) {
        if (s != z && !m.graph.adjacent(x, s)) {
            allowed.push_back(s);
        }
    }
    allowed.insert(allowed.end(), candidates.begin(), candidates.end());
    return connected_in_subgraph(m.graph, allowed, x, candidates);
}

std::vector<UStructure> u_structures(const Cmag& m) {
    const MixedGraph& g = m.graph;
    std::vector<UStructure> out;
    std::vector<Vertex> allowed;
    for (Vertex z = 0; z < g.size(); ++z) {
        if (m.info.scc_size_of(z) < 2) {
            continue;
        }
        const auto& members = m.info.scc_members(m.info.scc_of(z));
        for (Vertex x : g.neighbors(z)) {
            if (!g.is_arc(x, z)) {
                continue;
            }
            for (Vertex z_end : members) {
                if (z_end == z || g.adjacent(x, z_end)) {
                    continue;
                }
                for (Vertex y : g.neighbors(z_end)) {
                    if (m.info.same_scc(y, z) || y == x || !g.is_arc(y, z_end) ||
                        g.adjacent(y, x) || g.adjacent(y, z)) {
                        continue;
                    }
                    // Chords of a connecting path inside the SCC can be shortcut,
                    // so connectivity decides whether an uncovered path exists.
                    allowed.clear();
                    for (Vertex s : members) {
                        if (s == z || s == z_end || (!g.adjacent(s, x) && !g.adjacent(s, y))) {
                            allowed.push_back(s);
                        }
                    }
                    const Vertex target[] = {z_end};
                    if (connected_in_subgraph(g, allowed, z, target)) {
                        out.push_back({x, z, z_end, y});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VirtualColliderIndex virtual_collider_triples(const Cmag& m) { return build_index(m, nullptr); }

Cpag build_cpag(const DirectedGraph& g, const CpagOptions& options, StageTimings* timings) {
    return build_cpag(build_cmag(g, timings), options, timings);
}

Cpag build_cpag(const Cmag& m, const CpagOptions& options, StageTimings* timings) {
    const MixedGraph& cmag = m.graph;
    const AncestryInfo& info = m.info;
    const int n = cmag.size();

    Cpag p;
    p.graph = MixedGraph(n);
    p.provenance.assign(static_cast<std::size_t>(n) * n, MarkSource::Skeleton);
    const auto copy_edge = [&](Vertex a, Vertex b, MarkSource src) {
        p.graph.set_edge(a, *cmag.mark_at(a, b), b, *cmag.mark_at(b, a));
        p.provenance[static_cast<std::size_t>(a) * n + b] = src;
        p.provenance[static_cast<std::size_t>(b) * n + a] = src;
    };
    const auto is_circle_edge = [&](Vertex a, Vertex b) {
        return p.graph.mark_at(a, b) == EdgeMark::Circle &&
               p.graph.mark_at(b, a) == EdgeMark::Circle;
    };

    // Outer pair -> colliders of the (non-underlined) v-structures.
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> v_colliders;
    {
        ScopedStage t(timings, Stage::CpagInit);
        for (const MixedEdge& e : cmag.edges()) {
            p.graph.set_edge(e.i, EdgeMark::Circle, e.j, EdgeMark::Circle);
        }
        for (Vertex z = 0; z < n; ++z) {
            const std::vector<Vertex> parents = cmag_parents(cmag, z);
            for (std::size_t i = 0; i < parents.size(); ++i) {
                for (std::size_t j = i + 1; j < parents.size(); ++j) {
                    const Vertex a = parents[i];
                    const Vertex b = parents[j];
                    if (cmag.adjacent(a, b)) {
                        continue;
                    }
                    if (cmag.has_underline(a, z, b)) {
                        copy_edge(a, z, MarkSource::VirtualVStructure);
                        copy_edge(b, z, MarkSource::VirtualVStructure);
                        p.graph.add_underline(a, z, b);
                    } else {
                        copy_edge(a, z, MarkSource::VStructure);
                        copy_edge(b, z, MarkSource::VStructure);
                        v_colliders[{a, b}].push_back(z);
                    }
                }
            }
        }
    }

    VirtualColliderIndex index;
    {
        ScopedStage t(timings, Stage::UStructures);
        std::vector<std::pair<Vertex, Vertex>> first_edges;
        index = build_index(m, &first_edges);
        for (const auto& [x, z] : first_edges) {
            if (is_circle_edge(x, z)) {
                copy_edge(x, z, MarkSource::UStructure);
            }
        }
    }

    {
        ScopedStage t(timings, Stage::CpagPart2);
        // Vertices reaching w by a tail-first path that avoids z and its
        // neighbours (other than w), keyed by z * n + w.
        std::unordered_map<std::size_t, std::vector<char>> reach_cache;
        const auto ancestral_reach = [&](Vertex z, Vertex w) -> const std::vector<char>& {
            const std::size_t key = static_cast<std::size_t>(z) * n + w;
            auto [it, inserted] = reach_cache.try_emplace(key);
            if (!inserted) {
                return it->second;
            }
            std::vector<char>& seen = it->second;
            seen.assign(n, 0);
            std::vector<Vertex> queue{w};
            seen[w] = 1;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const Vertex v = queue[head];
                for (Vertex u : cmag.neighbors(v)) {
                    if (!seen[u] && u != z && !cmag.adjacent(u, z) && cmag.has_tail_at(u, v)) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
            return seen;
        };

        for (const Triple& vv : cmag.underlines()) {
            const Vertex x = vv.x;
            const Vertex z = vv.z;
            const Vertex y = vv.y;
            for (Vertex w : cmag.neighbors(z)) {
                if (w == x || w == y || !is_circle_edge(z, w)) {
                    continue;
                }
                if (index.contains(x, w, y)) {
                    copy_edge(z, w, MarkSource::Rule4Adjacent);
                    continue;
                }
                if (!cmag.is_arc(z, w)) {
                    continue;
                }
                if (options.cycle_filter && info.scc_size_of(w) < 2) {
                    continue;
                }
                const auto vc = v_colliders.find({x, y});
                if (vc != v_colliders.end() &&
                    std::any_of(vc->second.begin(), vc->second.end(),
                                [&](Vertex u) { return info.is_ancestor(u, w); })) {
                    continue;
                }
                const std::vector<char>& reach = ancestral_reach(z, w);
                for (Vertex b : index.colliders(x, y)) {
                    if (reach[b] && !info.is_ancestor(b, z)) {
                        copy_edge(z, w, MarkSource::Rule4Path);
                        break;
                    }
                }
            }
        }
    }
    return p;
}

bool cet_equivalent(const Cmag& m1, const Cmag& m2) {
    const int n = m1.graph.size();
    if (n != m2.graph.size()) {
        throw std::invalid_argument("CMAGs have different vertex counts");
    }
    for (Vertex v = 0; v < n; ++v) {
        if (m1.graph.neighbors(v) != m2.graph.neighbors(v)) {
            return false;
        }
    }
    if (v_structures(m1) != v_structures(m2)) {
        return false;
    }
    const VirtualColliderIndex vct1 = virtual_collider_triples(m1);
    const VirtualColliderIndex vct2 = virtual_collider_triples(m2);
    if (!(vct1 == vct2)) {
        return false;
    }
    // With identical skeletons and collider triples, the underlined triples are
    // the collider triples whose middle vertex is adjacent to both ends.
    for (const Triple& d : m1.graph.underlines()) {
        for (Vertex b : vct1.colliders(d.x, d.y)) {
            if (m1.info.is_ancestor(b, d.z) != m2.info.is_ancestor(b, d.z)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cyclequiv

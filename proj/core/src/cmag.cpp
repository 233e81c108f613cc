#include "cyclequiv/cmag.hpp"

#include <algorithm>

namespace cyclequiv {

namespace {

// True iff `x` descends from some common child of a and b in `g`.
bool descends_from_common_child(const DirectedGraph& g, const AncestryInfo& info, Vertex a,
                                Vertex b, Vertex x) {
    const auto& ca = g.children(a);
    const auto& cb = g.children(b);
    auto i = ca.begin();
    auto j = cb.begin();
    while (i != ca.end() && j != cb.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            if (info.is_ancestor(*i, x)) {
                return true;
            }
            ++i;
            ++j;
        }
    }
    return false;
}

}  // namespace

std::vector<Vertex> cmag_parents(const MixedGraph& m, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : m.neighbors(v)) {
        if (m.is_arc(w, v)) {
            out.push_back(w);
        }
    }
    return out;
}

Cmag build_cmag(const DirectedGraph& g, StageTimings* timings) {
    Cmag m;
    m.source = g;
    {
        ScopedStage t(timings, Stage::Ancestry);
        m.info = compute_ancestry(g);
    }
    const int n = g.size();
    m.graph = MixedGraph(n);

    {
        ScopedStage t(timings, Stage::CmagPart1);
        std::vector<Vertex> cyc;
        std::vector<Vertex> acy;
        for (Vertex x = 0; x < n; ++x) {
            cyc.clear();
            acy.clear();
            for (Vertex z : g.parents(x)) {
                (m.info.same_scc(z, x) ? cyc : acy).push_back(z);
            }
            for (Vertex za : acy) {
                m.graph.set_edge(za, EdgeMark::Tail, x, EdgeMark::Arrow);
                for (Vertex zc : cyc) {
                    m.graph.set_edge(za, EdgeMark::Tail, zc, EdgeMark::Arrow);
                }
            }
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                m.graph.set_edge(cyc[i], EdgeMark::Tail, x, EdgeMark::Tail);
                for (std::size_t j = i + 1; j < cyc.size(); ++j) {
                    m.graph.set_edge(cyc[i], EdgeMark::Tail, cyc[j], EdgeMark::Tail);
                }
            }
        }
    }

    {
        ScopedStage t(timings, Stage::CmagPart2);
        for (Vertex x = 0; x < n; ++x) {
            if (m.info.scc_size_of(x) < 2) {
                continue;
            }
            const std::vector<Vertex> parents = cmag_parents(m.graph, x);
            for (std::size_t i = 0; i < parents.size(); ++i) {
                const Vertex zi = parents[i];
                for (std::size_t j = i + 1; j < parents.size(); ++j) {
                    const Vertex zj = parents[j];
                    if (m.graph.adjacent(zi, zj)) {
                        continue;
                    }
                    // At least one of the two edges into x must be virtual.
                    if (g.adjacent(zi, x) && g.adjacent(zj, x)) {
                        continue;
                    }
                    if (!descends_from_common_child(g, m.info, zi, zj, x)) {
                        m.graph.add_underline(zi, x, zj);
                    }
                }
            }
        }
    }
    return m;
}

const std::set<Triple>& virtual_v_structures(const Cmag& m) { return m.graph.underlines(); }

std::vector<Triple> v_structures(const Cmag& m) {
    std::vector<Triple> out;
    for (Vertex z = 0; z < m.graph.size(); ++z) {
        const std::vector<Vertex> parents = cmag_parents(m.graph, z);
        for (std::size_t i = 0; i < parents.size(); ++i) {
            for (std::size_t j = i + 1; j < parents.size(); ++j) {
                if (!m.graph.adjacent(parents[i], parents[j]) &&
                    !m.graph.has_underline(parents[i], z, parents[j])) {
                    out.push_back(Triple::collider(parents[i], z, parents[j]));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclequiv

#include "cyclequiv/dsep.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace cyclequiv {

TooLargeError::TooLargeError(int n, int cap)
    : std::runtime_error("graph too large for exhaustive check: n=" + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap)) {}

namespace {

constexpr int from_child = 0;   // arrived against an arc: tail side at this vertex
constexpr int from_parent = 1;  // arrived along an arc: arrowhead at this vertex

}  // namespace

SeparationQuery::SeparationQuery(const DirectedGraph& g, const AncestryInfo& info)
    : g_(&g),
      info_(&info),
      in_z_(g.size(), 0),
      anc_count_(g.size(), 0),
      reached_(g.size(), 0),
      seen_(2 * static_cast<std::size_t>(g.size()), 0) {
    queue_.reserve(2 * static_cast<std::size_t>(g.size()));
}

void SeparationQuery::condition_on(std::span<const Vertex> z) {
    std::fill(in_z_.begin(), in_z_.end(), 0);
    std::fill(anc_count_.begin(), anc_count_.end(), 0);
    for (Vertex v : z) {
        if (!in_z_[v]) {
            toggle(v);
        }
    }
}

void SeparationQuery::toggle(Vertex v) {
    const int delta = in_z_[v] ? -1 : 1;
    in_z_[v] = static_cast<char>(!in_z_[v]);
    for (Vertex a = 0; a < g_->size(); ++a) {
        if (info_->is_ancestor(a, v)) {
            anc_count_[a] += delta;
        }
    }
}

const std::vector<char>& SeparationQuery::reachable_from(Vertex x) {
    std::fill(reached_.begin(), reached_.end(), 0);
    std::fill(seen_.begin(), seen_.end(), 0);
    queue_.clear();
    const auto push = [this](Vertex v, int dir) {
        const std::size_t key = 2 * static_cast<std::size_t>(v) + dir;
        if (!seen_[key]) {
            seen_[key] = 1;
            queue_.push_back(static_cast<int>(key));
        }
    };
    // The start vertex may leave along any edge, like a tail-side arrival.
    push(x, from_child);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const Vertex v = queue_[head] / 2;
        const int dir = queue_[head] % 2;
        if (v != x) {
            reached_[v] = 1;
        }
        if (dir == from_child) {
            if (in_z_[v]) {
                continue;
            }
            for (Vertex p : g_->parents(v)) push(p, from_child);
            for (Vertex c : g_->children(v)) push(c, from_parent);
        } else {
            if (!in_z_[v]) {
                for (Vertex c : g_->children(v)) push(c, from_parent);
            }
            if (anc_count_[v] > 0) {
                for (Vertex p : g_->parents(v)) push(p, from_child);
            }
        }
    }
    return reached_;
}

bool SeparationQuery::d_connected(Vertex x, Vertex y) { return reachable_from(x)[y] != 0; }

bool d_connected(const DirectedGraph& g, Vertex x, Vertex y, std::span<const Vertex> z) {
    return d_connected(g, compute_ancestry(g), x, y, z);
}

bool d_connected(const DirectedGraph& g, const AncestryInfo& info, Vertex x, Vertex y,
                 std::span<const Vertex> z) {
    const auto in_range = [&g](Vertex v) { return v >= 0 && v < g.size(); };
    if (!in_range(x) || !in_range(y) || x == y) {
        throw std::invalid_argument("d_connected requires distinct in-range endpoints");
    }
    for (Vertex v : z) {
        if (!in_range(v)) {
            throw std::invalid_argument("conditioning vertex out of range");
        }
        if (v == x || v == y) {
            throw std::invalid_argument("endpoint in conditioning set");
        }
    }
    SeparationQuery query(g, info);
    query.condition_on(z);
    return query.d_connected(x, y);
}

bool markov_equivalent_bruteforce(const DirectedGraph& g1, const DirectedGraph& g2, int max_n) {
    if (g1.size() != g2.size()) {
        throw std::invalid_argument("graphs have different vertex counts");
    }
    const int n = g1.size();
    if (n > max_n || n > 30) {
        throw TooLargeError(n, std::min(max_n, 30));
    }
    const AncestryInfo info1 = compute_ancestry(g1);
    const AncestryInfo info2 = compute_ancestry(g2);
    SeparationQuery q1(g1, info1);
    SeparationQuery q2(g2, info2);
    // Gray-code walk over all conditioning sets: one vertex toggles per step.
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            const Vertex flip = std::countr_zero(step);
            q1.toggle(flip);
            q2.toggle(flip);
        }
        for (Vertex x = 0; x < n; ++x) {
            if (q1.conditioned(x)) {
                continue;
            }
            const std::vector<char>& r1 = q1.reachable_from(x);
            const std::vector<char>& r2 = q2.reachable_from(x);
            for (Vertex y = x + 1; y < n; ++y) {
                if (!q1.conditioned(y) && r1[y] != r2[y]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool virtually_adjacent(const DirectedGraph& g, Vertex a, Vertex b, const AncestryInfo& info) {
    if (a == b || g.adjacent(a, b)) {
        return false;
    }
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
            if (info.is_ancestor(*i, a) || info.is_ancestor(*i, b)) {
                return true;
            }
            ++i;
            ++j;
        }
    }
    return false;
}

bool itinerary_adjacent(const DirectedGraph& g, Vertex a, Vertex b, const AncestryInfo& info) {
    return a != b && (g.adjacent(a, b) || virtually_adjacent(g, a, b, info));
}

const char* to_string(TripleKind kind) {
    switch (kind) {
        case TripleKind::NotItinerary:
            return "not-itinerary";
        case TripleKind::Conductor:
            return "conductor";
        case TripleKind::PerfectNonconductor:
            return "perfect-nonconductor";
        case TripleKind::ImperfectNonconductor:
            return "imperfect-nonconductor";
    }
    return "?";
}

TripleClass classify_triple(const DirectedGraph& g, Vertex a, Vertex b, Vertex c,
                            const AncestryInfo& info) {
    TripleClass out;
    if (!itinerary_adjacent(g, a, b, info) || !itinerary_adjacent(g, b, c, info)) {
        return out;
    }
    out.shielded = itinerary_adjacent(g, a, c, info);
    if (info.is_ancestor(b, a) || info.is_ancestor(b, c)) {
        out.kind = TripleKind::Conductor;
        return out;
    }
    out.kind = TripleKind::ImperfectNonconductor;
    for (Vertex d : g.children(a)) {
        if (g.has_edge(c, d) && info.is_ancestor(d, b)) {
            out.kind = TripleKind::PerfectNonconductor;
            break;
        }
    }
    return out;
}

std::vector<MeConductorPair> find_me_conductor_pairs(const DirectedGraph& g,
                                                     const AncestryInfo& info, int max_n) {
    const int n = g.size();
    if (n > max_n) {
        throw TooLargeError(n, max_n);
    }
    std::vector<char> vadj(static_cast<std::size_t>(n) * n, 0);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            vadj[static_cast<std::size_t>(a) * n + b] = itinerary_adjacent(g, a, b, info);
        }
    }
    const auto adj = [&](Vertex a, Vertex b) { return vadj[static_cast<std::size_t>(a) * n + b] != 0; };

    std::vector<MeConductorPair> out;
    std::vector<Vertex> seq;
    std::vector<char> used(n, 0);

    // Extending `seq` by `v` keeps it an uncovered itinerary.
    const auto extends = [&](Vertex v) {
        if (used[v] || !adj(seq.back(), v)) {
            return false;
        }
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            if (adj(seq[k], v)) {
                return false;
            }
        }
        return true;
    };

    const auto record_if_valid = [&]() {
        const std::size_t len = seq.size();  // X_0 .. X_{k+1}
        const Vertex start = seq.front();
        const Vertex end = seq.back();
        for (std::size_t i = 1; i + 1 < len; ++i) {
            for (std::size_t j = 1; j + 1 < len; ++j) {
                if (!info.is_ancestor(seq[i], seq[j])) return;
            }
            if (info.is_ancestor(seq[i], start) || info.is_ancestor(seq[i], end)) return;
        }
        for (std::size_t i = 1; i + 1 < len; ++i) {
            if (classify_triple(g, seq[i - 1], seq[i], seq[i + 1], info).kind !=
                TripleKind::Conductor) {
                return;
            }
        }
        out.push_back({{seq[0], seq[1], seq[2]},
                       {seq[len - 3], seq[len - 2], seq[len - 1]},
                       seq});
    };

    // Interior vertices all share X_1's component and are no ancestors of X_0;
    // the search prunes on that and checks the full definition on completion.
    std::function<void()> grow = [&]() {
        const Vertex start = seq.front();
        const Vertex first_inner = seq[1];
        for (Vertex v = 0; v < n; ++v) {
            if (!extends(v)) {
                continue;
            }
            seq.push_back(v);
            used[v] = 1;
            if (seq.size() >= 4 && !info.is_ancestor(first_inner, v)) {
                record_if_valid();
            }
            if (info.same_scc(v, first_inner) && !info.is_ancestor(v, start)) {
                grow();
            }
            used[v] = 0;
            seq.pop_back();
        }
    };

    for (Vertex x0 = 0; x0 < n; ++x0) {
        for (Vertex x1 = 0; x1 < n; ++x1) {
            if (x1 == x0 || !adj(x0, x1) || info.scc_size_of(x1) < 2 ||
                info.is_ancestor(x1, x0)) {
                continue;
            }
            seq = {x0, x1};
            used[x0] = used[x1] = 1;
            grow();
            used[x0] = used[x1] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclequiv

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cyclequiv::oracle {

std::vector<std::vector<char>> transitive_closure(const DirectedGraph& g) {
    const int n = g.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> queue{s};
        reach[s][s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex c : g.children(queue[head])) {
                if (!reach[s][c]) {
                    reach[s][c] = 1;
                    queue.push_back(c);
                }
            }
        }
    }
    return reach;
}

namespace {

struct PathSearch {
    const DirectedGraph& g;
    std::vector<char> in_z;
    std::vector<char> anc_of_z;
    std::vector<char> on_path;
    Vertex target;

    // `arrow_at_v`: the edge we arrived by points into v.
    bool extend(Vertex v, bool arrow_at_v, bool is_start) {
        if (v == target) {
            return true;
        }
        for (Vertex w = 0; w < g.size(); ++w) {
            if (on_path[w]) {
                continue;
            }
            for (bool into_v : {false, true}) {
                // into_v: use the arc w -> v; otherwise v -> w.
                if (into_v ? !g.has_edge(w, v) : !g.has_edge(v, w)) {
                    continue;
                }
                if (!is_start) {
                    const bool collider = arrow_at_v && into_v;
                    if (collider ? !anc_of_z[v] : in_z[v]) {
                        continue;
                    }
                }
                on_path[w] = 1;
                const bool found = extend(w, !into_v, false);
                on_path[w] = 0;
                if (found) {
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

bool d_connected_by_paths(const DirectedGraph& g, Vertex x, Vertex y, std::span<const Vertex> z) {
    const int n = g.size();
    PathSearch s{g, std::vector<char>(n, 0), std::vector<char>(n, 0), std::vector<char>(n, 0), y};
    const auto reach = transitive_closure(g);
    for (Vertex v : z) {
        s.in_z[v] = 1;
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex v : z) {
            if (reach[a][v]) {
                s.anc_of_z[a] = 1;
            }
        }
    }
    s.on_path[x] = 1;
    return s.extend(x, false, true);
}

namespace {

std::vector<Vertex> subset(int n, Vertex x, Vertex y, std::uint64_t mask) {
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v) {
        if (v != x && v != y) {
            others.push_back(v);
        }
    }
    std::vector<Vertex> z;
    for (std::size_t i = 0; i < others.size(); ++i) {
        if ((mask >> i) & 1U) {
            z.push_back(others[i]);
        }
    }
    return z;
}

}  // namespace

bool separable(const DirectedGraph& g, Vertex a, Vertex b) {
    const int n = g.size();
    for (std::uint64_t mask = 0; mask < (1ULL << (n - 2)); ++mask) {
        if (!d_connected_by_paths(g, a, b, subset(n, a, b, mask))) {
            return true;
        }
    }
    return false;
}

std::vector<char> separation_signature(const DirectedGraph& g) {
    const int n = g.size();
    std::vector<char> bits;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            for (std::uint64_t mask = 0; mask < (1ULL << (n - 2)); ++mask) {
                bits.push_back(d_connected_by_paths(g, x, y, subset(n, x, y, mask)));
            }
        }
    }
    return bits;
}

bool connected_by_paths(const MixedGraph& m, std::span<const Vertex> allowed, Vertex src,
                        std::span<const Vertex> targets) {
    std::vector<char> ok(m.size(), 0);
    std::vector<char> visited(m.size(), 0);
    for (Vertex v : allowed) {
        ok[v] = 1;
    }
    std::function<bool(Vertex)> dfs = [&](Vertex v) {
        if (std::find(targets.begin(), targets.end(), v) != targets.end()) {
            return true;
        }
        visited[v] = 1;
        for (Vertex w = 0; w < m.size(); ++w) {
            if (ok[w] && !visited[w] && m.adjacent(v, w) && dfs(w)) {
                return true;
            }
        }
        visited[v] = 0;
        return false;
    };
    return dfs(src);
}

std::vector<std::array<Vertex, 4>> u_structures_by_paths(const MixedGraph& cmag,
                                                         const std::vector<int>& scc_id) {
    const int n = cmag.size();
    std::set<std::array<Vertex, 4>> found;
    std::vector<Vertex> path;
    const auto uncovered = [&] {
        for (std::size_t i = 0; i < path.size(); ++i) {
            for (std::size_t j = i + 2; j < path.size(); ++j) {
                if (cmag.adjacent(path[i], path[j])) {
                    return false;
                }
            }
        }
        return true;
    };
    std::function<void(Vertex)> walk = [&](Vertex v) {
        // path = x, z, .., v
        if (path.size() >= 3) {
            for (Vertex y = 0; y < n; ++y) {
                if (scc_id[y] == scc_id[v] || !cmag.is_arc(y, v) ||
                    std::find(path.begin(), path.end(), y) != path.end()) {
                    continue;
                }
                path.push_back(y);
                if (uncovered()) {
                    found.insert({path[0], path[1], v, y});
                }
                path.pop_back();
            }
        }
        for (Vertex w = 0; w < n; ++w) {
            if (scc_id[w] == scc_id[v] && cmag.adjacent(v, w) &&
                std::find(path.begin(), path.end(), w) == path.end()) {
                path.push_back(w);
                walk(w);
                path.pop_back();
            }
        }
    };
    for (Vertex z = 0; z < n; ++z) {
        if (std::count(scc_id.begin(), scc_id.end(), scc_id[z]) < 2) {
            continue;
        }
        for (Vertex x = 0; x < n; ++x) {
            if (cmag.is_arc(x, z) && scc_id[x] != scc_id[z]) {
                path = {x, z};
                walk(z);
            }
        }
    }
    return {found.begin(), found.end()};
}

DirectedGraph gilbert_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a != b && coin(rng)) {
                edges.push_back({a, b});
            }
        }
    }
    return DirectedGraph(n, edges);
}

DirectedGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a != b) {
                if ((mask >> bit) & 1U) {
                    edges.push_back({a, b});
                }
                ++bit;
            }
        }
    }
    return DirectedGraph(n, edges);
}

}  // namespace cyclequiv::oracle

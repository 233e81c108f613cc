#include "cyclequiv/reachability.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclequiv {

bool AncestryInfo::is_ancestor_of_any(Vertex v, std::span<const Vertex> targets) const {
    const std::uint64_t* row = desc_row(scc_id_[v]);
    return std::any_of(targets.begin(), targets.end(),
                       [row](Vertex t) { return (row[t >> 6] >> (t & 63)) & 1U; });
}

std::vector<Vertex> AncestryInfo::descendants(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < size(); ++w) {
        if (is_ancestor(v, w)) {
            out.push_back(w);
        }
    }
    return out;
}

AncestryInfo compute_ancestry(const DirectedGraph& g) {
    const int n = g.size();
    AncestryInfo info;
    info.scc_id_.assign(n, -1);
    info.words_ = (static_cast<std::size_t>(n) + 63) / 64;

    constexpr int unvisited = -1;
    std::vector<int> index(n, unvisited);
    std::vector<int> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    // Explicit DFS frames: (vertex, next child position).
    std::vector<std::pair<Vertex, std::size_t>> frames;
    int counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        frames.emplace_back(root, 0);
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto& ch = g.children(v);
            if (pos < ch.size()) {
                const Vertex w = ch[pos++];
                if (index[w] == unvisited) {
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Vertex done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const Vertex parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] != index[done]) {
                continue;
            }
            // `done` roots a component; every successor component is already closed.
            const int comp = info.scc_count();
            std::vector<Vertex> members;
            Vertex w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                info.scc_id_[w] = comp;
                members.push_back(w);
            } while (w != done);
            std::sort(members.begin(), members.end());

            info.desc_.resize(info.desc_.size() + info.words_, 0);
            std::uint64_t* row = info.desc_.data() + static_cast<std::size_t>(comp) * info.words_;
            for (Vertex u : members) {
                row[u >> 6] |= std::uint64_t{1} << (u & 63);
            }
            for (Vertex u : members) {
                for (Vertex c : g.children(u)) {
                    const int other = info.scc_id_[c];
                    if (other == comp) {
                        continue;
                    }
                    const std::uint64_t* src = info.desc_row(other);
                    for (std::size_t k = 0; k < info.words_; ++k) {
                        row[k] |= src[k];
                    }
                }
            }
            info.scc_members_.push_back(std::move(members));
        }
    }
    return info;
}

bool connected_in_subgraph(const MixedGraph& m, std::span<const Vertex> allowed, Vertex src,
                           std::span<const Vertex> targets) {
    std::vector<char> in_allowed(m.size(), 0);
    for (Vertex v : allowed) {
        in_allowed[v] = 1;
    }
    if (src < 0 || src >= m.size() || !in_allowed[src]) {
        throw std::invalid_argument("source vertex not in allowed set");
    }
    std::vector<char> is_target(m.size(), 0);
    for (Vertex t : targets) {
        is_target[t] = 1;
    }
    std::vector<char> seen(m.size(), 0);
    std::vector<Vertex> queue{src};
    seen[src] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        if (is_target[v]) {
            return true;
        }
        for (Vertex w : m.neighbors(v)) {
            if (in_allowed[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return false;
}

std::vector<Vertex> uncovered_subpath(const MixedGraph& m, std::span<const Vertex> path,
                                      bool require_ancestral) {
    if (path.empty()) {
        throw std::invalid_argument("empty path");
    }
    std::vector<char> seen(m.size(), 0);
    for (std::size_t k = 0; k < path.size(); ++k) {
        const Vertex v = path[k];
        if (v < 0 || v >= m.size() || seen[v]) {
            throw std::invalid_argument("path vertices must be distinct and in range");
        }
        seen[v] = 1;
        if (k > 0 && !m.adjacent(path[k - 1], v)) {
            throw std::invalid_argument("consecutive path vertices are not adjacent");
        }
        if (k > 0 && require_ancestral && !m.has_tail_at(path[k - 1], v)) {
            throw std::invalid_argument("path is not ancestral");
        }
    }
    std::vector<Vertex> out{path.front()};
    std::size_t at = 0;
    while (at + 1 < path.size()) {
        std::size_t next = at + 1;
        for (std::size_t k = path.size() - 1; k > at + 1; --k) {
            if (m.adjacent(path[at], path[k]) &&
                (!require_ancestral || m.has_tail_at(path[at], path[k]))) {
                next = k;
                break;
            }
        }
        out.push_back(path[next]);
        at = next;
    }
    return out;
}

}  // namespace cyclequiv

#include "cyclequiv/randgraph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "cyclequiv/permutation.hpp"
#include "cyclequiv/reachability.hpp"

namespace cyclequiv {

const char* to_string(BudgetConvention c) {
    return c == BudgetConvention::Literal ? "literal" : "half";
}

BudgetConvention parse_convention(std::string_view s) {
    if (s == "literal") {
        return BudgetConvention::Literal;
    }
    if (s == "half") {
        return BudgetConvention::Half;
    }
    throw std::invalid_argument("unknown budget convention '" + std::string(s) + "'");
}

void validate(const GenParams& p) {
    if (p.n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (!(p.d >= 0.0) || !std::isfinite(p.d)) {
        throw std::invalid_argument("density must be finite and nonnegative");
    }
    for (double share : {p.p_two, p.p_acy, p.p_cyc}) {
        if (!(share >= 0.0 && share <= 1.0)) {
            throw std::invalid_argument("edge shares must lie in [0, 1]");
        }
    }
    if (std::abs(p.p_two + p.p_acy + p.p_cyc - 1.0) > 1e-9) {
        throw std::invalid_argument("edge shares must sum to 1");
    }
}

EdgeBudget edge_budget(const GenParams& p) {
    validate(p);
    EdgeBudget b;
    const double scale = p.convention == BudgetConvention::Literal ? 1.0 : 0.5;
    b.total = std::llround(p.n * p.d * scale);
    b.two_cycles = std::min(std::llround(p.p_two * b.total / 2.0), b.total / 2);
    b.acyclic = std::min(std::llround(p.p_acy * b.total), b.total - 2 * b.two_cycles);
    b.free = b.total - 2 * b.two_cycles - b.acyclic;
    return b;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) ^ index);
}

std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below requires a positive bound");
    }
    // Largest multiple of bound that fits; draws at or above it are rejected.
    const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (limit == 0 || r < limit) {
            return r % bound;
        }
    }
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<Vertex> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = i;
    }
    for (int i = n - 1; i > 0; --i) {
        std::swap(out[i], out[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    }
    return out;
}

namespace {

enum class Slots { Unordered, Ordered };

class ArcSampler {
public:
    ArcSampler(std::mt19937_64& rng, int n)
        : rng_(rng), n_(n), used_(static_cast<std::size_t>(n) * n, 0) {}

    // Draws `count` distinct free slots. Unordered slots are pairs a < b with
    // both directions free; ordered slots are arcs a -> b with a != b.
    template <typename Take>
    void draw(long long count, Slots kind, Take take) {
        long long free = 0;
        for (Vertex a = 0; a < n_; ++a) {
            for (Vertex b = 0; b < n_; ++b) {
                free += is_free(a, b, kind);
            }
        }
        if (count > free) {
            throw std::invalid_argument("edge budget exceeds the available vertex pairs");
        }
        const std::uint64_t cells = static_cast<std::uint64_t>(n_) * n_;
        // Rejection is cheap while at least half the remaining slots are free.
        while (count > 0 && free >= 2 * count) {
            const std::uint64_t s = uniform_below(rng_, cells);
            const Vertex a = static_cast<Vertex>(s / n_);
            const Vertex b = static_cast<Vertex>(s % n_);
            if (is_free(a, b, kind)) {
                take(a, b);
                --count;
                --free;
            }
        }
        if (count == 0) {
            return;
        }
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (Vertex a = 0; a < n_; ++a) {
            for (Vertex b = 0; b < n_; ++b) {
                if (is_free(a, b, kind)) {
                    slots.emplace_back(a, b);
                }
            }
        }
        for (long long i = 0; i < count; ++i) {
            const auto j = i + static_cast<long long>(uniform_below(rng_, slots.size() - i));
            std::swap(slots[i], slots[j]);
            take(slots[i].first, slots[i].second);
        }
    }

    void mark(Vertex a, Vertex b) { used_[static_cast<std::size_t>(a) * n_ + b] = 1; }

private:
    bool used(Vertex a, Vertex b) const { return used_[static_cast<std::size_t>(a) * n_ + b]; }

    bool is_free(Vertex a, Vertex b, Slots kind) const {
        if (kind == Slots::Unordered) {
            return a < b && !used(a, b) && !used(b, a);
        }
        return a != b && !used(a, b);
    }

    std::mt19937_64& rng_;
    int n_;
    std::vector<char> used_;
};

}  // namespace

DirectedGraph generate(const GenParams& p) {
    const EdgeBudget budget = edge_budget(p);
    const long long n = p.n;
    if (budget.total > n * (n - 1)) {
        throw std::invalid_argument("edge budget " + std::to_string(budget.total) +
                                    " exceeds n(n-1) = " + std::to_string(n * (n - 1)));
    }
    std::mt19937_64 rng = make_engine(p.seed);
    ArcSampler sampler(rng, p.n);
    std::vector<Edge> edges;
    edges.reserve(budget.total);
    const auto add = [&](Vertex a, Vertex b) {
        sampler.mark(a, b);
        edges.push_back({a, b});
    };

    sampler.draw(budget.two_cycles, Slots::Unordered, [&](Vertex a, Vertex b) {
        add(a, b);
        add(b, a);
    });
    // Before relabelling, "a < b" is exactly the acyclic orientation.
    sampler.draw(budget.acyclic, Slots::Unordered, add);
    sampler.draw(budget.free, Slots::Ordered, add);

    const NodePermutation perm(random_permutation(rng, p.n));
    return apply_permutation(DirectedGraph(p.n, edges), perm);
}

std::vector<std::string> describe(const GenParams& p) {
    const auto num = [](double v) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    };
    std::string params = "gen n=" + std::to_string(p.n) + " d=" + num(p.d) +
                         " ptwo=" + num(p.p_two) + " pacy=" + num(p.p_acy) +
                         " pcyc=" + num(p.p_cyc) + " seed=" + std::to_string(p.seed) +
                         " convention=" + to_string(p.convention);
    return {params, "prng " + std::string(prng_name)};
}

SccStats scc_stats(const DirectedGraph& g) {
    const AncestryInfo info = compute_ancestry(g);
    SccStats s;
    for (int c = 0; c < info.scc_count(); ++c) {
        const int size = static_cast<int>(info.scc_members(c).size());
        s.nontrivial += size >= 2;
        s.largest = std::max(s.largest, size);
    }
    return s;
}

}  // namespace cyclequiv

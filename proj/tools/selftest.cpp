#include <algorithm>
#include <ostream>

#include "cli.hpp"
#include "cyclequiv/cmag.hpp"
#include "cyclequiv/cpag.hpp"
#include "cyclequiv/dsep.hpp"
#include "cyclequiv/randgraph.hpp"
#include "cyclequiv/serialize.hpp"

namespace cyclequiv::cli {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(uniform_below(rng, 1ULL << 53)) / static_cast<double>(1ULL << 53);
}

GenParams random_params(std::mt19937_64& rng, int max_n) {
    GenParams p;
    p.n = 3 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n) - 2));
    p.d = std::min(1.0 + 2.0 * uniform01(rng), static_cast<double>(p.n - 1));
    const double a = uniform01(rng);
    const double b = uniform01(rng);
    const double c = uniform01(rng) + 1e-3;
    p.p_two = a / (a + b + c);
    p.p_acy = b / (a + b + c);
    p.p_cyc = 1.0 - p.p_two - p.p_acy;
    p.seed = rng();
    // With d <= n - 1 the half convention keeps every stage feasible.
    p.convention = BudgetConvention::Half;
    return p;
}

// Reverses, drops, adds or doubles one arc; small edits often stay in the
// same equivalence class.
DirectedGraph mutate(const DirectedGraph& g, std::mt19937_64& rng) {
    std::vector<Edge> edges = g.edges();
    const int n = g.size();
    const auto op = uniform_below(rng, 4);
    if (!edges.empty() && op < 3) {
        const auto i = uniform_below(rng, edges.size());
        const Edge e = edges[i];
        if (op == 0 && !g.has_edge(e.to, e.from)) {
            edges[i] = {e.to, e.from};
        } else if (op == 1) {
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
        } else if (op == 2 && !g.has_edge(e.to, e.from)) {
            edges.push_back({e.to, e.from});
        }
    } else {
        const auto a = static_cast<Vertex>(uniform_below(rng, n));
        const auto b = static_cast<Vertex>(uniform_below(rng, n));
        if (a != b && !g.has_edge(a, b)) {
            edges.push_back({a, b});
        }
    }
    return DirectedGraph(n, edges);
}

}  // namespace

SelftestReport run_selftest(int pairs, int max_n, std::uint64_t seed, std::ostream& log) {
    std::mt19937_64 rng = make_engine(seed);
    SelftestReport report;
    for (int i = 0; i < pairs; ++i) {
        const GenParams params = random_params(rng, max_n);
        const DirectedGraph g1 = generate(params);
        DirectedGraph g2;
        if (uniform_below(rng, 3) == 0) {
            GenParams other = params;
            other.seed = rng();
            g2 = generate(other);
        } else {
            g2 = mutate(g1, rng);
            if (uniform_below(rng, 2) == 0) {
                g2 = mutate(g2, rng);
            }
        }
        const bool oracle = markov_equivalent_bruteforce(g1, g2);
        const Cmag m1 = build_cmag(g1);
        const Cmag m2 = build_cmag(g2);
        const bool by_cpag = pag_equal(build_cpag(m1).graph, build_cpag(m2).graph);
        const bool by_cet = cet_equivalent(m1, m2);
        ++report.pairs;
        report.equivalent += oracle;
        if (by_cpag != oracle || by_cet != oracle) {
            ++report.disagreements;
            log << "disagreement (oracle " << oracle << ", cpag " << by_cpag << ", cet " << by_cet
                << ")\n"
                << encode(g1) << encode(g2);
        }
    }
    return report;
}

}  // namespace cyclequiv::cli

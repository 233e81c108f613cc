#ifndef CYCLEQUIV_RANDGRAPH_HPP
#define CYCLEQUIV_RANDGRAPH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cyclequiv/directed_graph.hpp"

namespace cyclequiv {

/// How the density `d` translates into an edge budget E.
enum class BudgetConvention {
    Literal,  // E = round(n * d)
    Half,     // E = round(n * d / 2), d is the mean total degree
};

const char* to_string(BudgetConvention c);
/// Accepts "literal" and "half"; throws std::invalid_argument otherwise.
BudgetConvention parse_convention(std::string_view s);

struct GenParams {
    int n = 0;
    double d = 0.0;
    double p_two = 0.0;  // share of the budget spent on 2-cycles
    double p_acy = 1.0;  // share spent on arcs i -> j with i < j
    double p_cyc = 0.0;  // share spent on arbitrary arcs
    std::uint64_t seed = 0;
    BudgetConvention convention = BudgetConvention::Literal;
};

/// Throws std::invalid_argument unless n >= 1, d >= 0, each share lies in
/// [0, 1] and the shares sum to 1 within 1e-9.
void validate(const GenParams& p);

/// Edge budget of each stage. Rounding is half away from zero; the 2-cycle and
/// acyclic stages are clipped so they never exceed the total.
struct EdgeBudget {
    long long total = 0;
    long long two_cycles = 0;  // pairs, each contributing two arcs
    long long acyclic = 0;
    long long free = 0;
};

EdgeBudget edge_budget(const GenParams& p);

/// Identifier of the pseudorandom stream, recorded in generated files.
inline constexpr std::string_view prng_name = "mt19937_64+splitmix64";

/// SplitMix64 finaliser; used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed for item `index` of a batch rooted at `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Engine seeded with splitmix64(seed).
std::mt19937_64 make_engine(std::uint64_t seed);
/// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniformly random permutation of 0..n-1 (Fisher-Yates on the identity).
std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n);

/// Draws 2-cycles, then acyclic arcs, then arbitrary arcs, and finally
/// relabels the vertices by a random permutation. Deterministic in `p`.
/// Throws std::invalid_argument for invalid parameters or when a stage
/// needs more arcs than there are free vertex pairs.
DirectedGraph generate(const GenParams& p);

/// Comment lines describing `p`, for the header of a `cdg 1` file.
std::vector<std::string> describe(const GenParams& p);

struct SccStats {
    int nontrivial = 0;  // components with at least two vertices
    int largest = 0;
};

SccStats scc_stats(const DirectedGraph& g);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_RANDGRAPH_HPP

#ifndef CYCLEQUIV_BENCH_HPP
#define CYCLEQUIV_BENCH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclequiv/mixed_graph.hpp"
#include "cyclequiv/randgraph.hpp"
#include "cyclequiv/stage_timer.hpp"

namespace cyclequiv {

struct BenchConfig {
    std::vector<int> sizes;
    std::vector<double> densities;
    int reps = 1;
    std::uint64_t base_seed = 0;
    double p_two = 0.1;
    double p_acy = 0.82;
    double p_cyc = 0.08;
    BudgetConvention convention = BudgetConvention::Literal;
    /// Worker threads for independent cells; 0 reads CYCLEQUIV_THREADS.
    int threads = 0;
};

struct BenchRecord {
    int n = 0;
    double d = 0.0;
    std::uint64_t seed = 0;
    BudgetConvention convention = BudgetConvention::Literal;
    StageTimings stages;
    double total_us = 0.0;
    std::uint64_t digest = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
/// FNV-1a of the canonical `pag 1` encoding.
std::uint64_t pag_digest(const MixedGraph& pag);
/// 16 lowercase hex digits.
std::string hex_digest(std::uint64_t digest);

/// Worker count from CYCLEQUIV_THREADS, else the hardware concurrency (at least 1).
int default_thread_count();

/// Seed of repetition `rep` in the cell (n, d).
std::uint64_t cell_seed(std::uint64_t base_seed, int n, double d, int rep);

/// One record per (n, d, rep), sorted by (n, d, seed). Each cell first runs
/// one untimed warm-up build. Cells may run concurrently, but every timed
/// build runs on a single thread. Throws std::invalid_argument if reps < 1.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

/// Generates one graph and times the construction of its CPAG.
BenchRecord time_one(const GenParams& params);

inline constexpr std::string_view csv_header =
    "n,d,seed,convention,ancestry_us,cmag_part1_us,cmag_part2_us,cpag_init_us,"
    "u_structures_us,cpag_part2_us,total_us,digest";

std::string emit_csv(const std::vector<BenchRecord>& records);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_BENCH_HPP

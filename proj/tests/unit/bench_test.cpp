#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <stdexcept>

#include "csv.hpp"
#include "cyclequiv/bench.hpp"
#include "cyclequiv/cpag.hpp"
#include "cyclequiv/serialize.hpp"

namespace cyclequiv {
namespace {

TEST(Bench, SingleRecord) {
    BenchConfig config;
    config.sizes = {10};
    config.densities = {3.0};
    config.reps = 1;
    const auto records = run_benchmark(config);
    ASSERT_EQ(records.size(), 1u);
    const BenchRecord& r = records[0];
    EXPECT_EQ(r.n, 10);
    EXPECT_EQ(r.d, 3.0);
    for (double us : r.stages.micros) {
        EXPECT_GE(us, 0.0);
    }
    EXPECT_GE(r.total_us, r.stages.sum());
}

TEST(Bench, DigestsAreDeterministicAndMatchTheCpag) {
    BenchConfig config;
    config.sizes = {20, 30};
    config.densities = {2.0, 3.0};
    config.reps = 3;
    config.base_seed = 17;
    config.threads = 2;
    const auto a = run_benchmark(config);
    config.threads = 1;
    const auto b = run_benchmark(config);
    ASSERT_EQ(a.size(), 12u);
    ASSERT_EQ(b.size(), 12u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].seed, b[i].seed);
        EXPECT_EQ(a[i].digest, b[i].digest);
        GenParams p;
        p.n = a[i].n;
        p.d = a[i].d;
        p.p_two = config.p_two;
        p.p_acy = config.p_acy;
        p.p_cyc = config.p_cyc;
        p.seed = a[i].seed;
        EXPECT_EQ(a[i].digest, pag_digest(build_cpag(generate(p)).graph));
    }
    const auto key = [](const BenchRecord& r) { return std::tuple(r.n, r.d, r.seed); };
    for (std::size_t i = 1; i < a.size(); ++i) {
        EXPECT_LE(key(a[i - 1]), key(a[i]));
    }
    EXPECT_EQ(a[0].seed, std::min(cell_seed(17, 20, 2.0, 0),
                                  std::min(cell_seed(17, 20, 2.0, 1), cell_seed(17, 20, 2.0, 2))));
}

TEST(Bench, RejectsZeroReps) {
    BenchConfig config;
    config.sizes = {10};
    config.densities = {1.0};
    config.reps = 0;
    EXPECT_THROW(run_benchmark(config), std::invalid_argument);
}

TEST(Bench, PropagatesGenerationErrors) {
    BenchConfig config;
    config.sizes = {3};
    config.densities = {10.0};
    EXPECT_THROW(run_benchmark(config), std::invalid_argument);
}

TEST(Bench, Fnv1a) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
    EXPECT_EQ(hex_digest(0xaf63dc4c8601ec8cULL), "af63dc4c8601ec8c");
    EXPECT_EQ(hex_digest(0x1fULL), "000000000000001f");
}

TEST(Bench, CsvShapeAndRoundTrip) {
    EXPECT_EQ(emit_csv({}), std::string(csv_header) + "\n");
    BenchConfig config;
    config.sizes = {15};
    config.densities = {2.5};
    config.reps = 3;
    const auto records = run_benchmark(config);
    const std::string csv = emit_csv(records);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_EQ(testing::parse_bench_csv(csv), records);
}

TEST(Bench, ThreadCountFromEnvironment) {
    ::setenv("CYCLEQUIV_THREADS", "3", 1);
    EXPECT_EQ(default_thread_count(), 3);
    ::setenv("CYCLEQUIV_THREADS", "zero", 1);
    EXPECT_GE(default_thread_count(), 1);
    ::unsetenv("CYCLEQUIV_THREADS");
    EXPECT_GE(default_thread_count(), 1);
}

}  // namespace
}  // namespace cyclequiv

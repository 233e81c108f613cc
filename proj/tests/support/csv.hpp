#ifndef CYCLEQUIV_TESTS_CSV_HPP
#define CYCLEQUIV_TESTS_CSV_HPP

#include <string>
#include <vector>

#include "cyclequiv/bench.hpp"

namespace cyclequiv::testing {

/// Reads the benchmark CSV back into records; throws std::runtime_error on
/// a wrong header or a malformed row.
std::vector<BenchRecord> parse_bench_csv(const std::string& text);

}  // namespace cyclequiv::testing

#endif  // CYCLEQUIV_TESTS_CSV_HPP

#ifndef CYCLEQUIV_TOOLS_CLI_HPP
#define CYCLEQUIV_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclequiv::cli {

enum ExitStatus : int {
    exit_ok = 0,  // success, or "equivalent"
    exit_not_equivalent = 1,
    exit_input_error = 2,
    exit_internal_error = 3,
};

/// Runs one command line; `args` excludes the program name. Primary results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestReport {
    int pairs = 0;
    int equivalent = 0;
    int disagreements = 0;
};

/// Compares CPAG equality, the direct criterion and brute force on random
/// pairs of graphs with at most `max_n` vertices. Disagreements are written
/// to `log`.
SelftestReport run_selftest(int pairs, int max_n, std::uint64_t seed, std::ostream& log);

}  // namespace cyclequiv::cli

#endif  // CYCLEQUIV_TOOLS_CLI_HPP

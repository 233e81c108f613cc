#include "cyclequiv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cyclequiv/cpag.hpp"
#include "cyclequiv/serialize.hpp"

namespace cyclequiv {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t pag_digest(const MixedGraph& pag) { return fnv1a64(encode(pag)); }

std::string hex_digest(std::uint64_t digest) {
    std::string out(16, '0');
    char buf[16];
    const auto res = std::to_chars(buf, buf + sizeof buf, digest, 16);
    const auto len = static_cast<std::size_t>(res.ptr - buf);
    std::memcpy(out.data() + 16 - len, buf, len);
    return out;
}

int default_thread_count() {
    if (const char* env = std::getenv("CYCLEQUIV_THREADS")) {
        int value = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec == std::errc() && res.ptr == s.data() + s.size() && value >= 1) {
            return value;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t cell_seed(std::uint64_t base_seed, int n, double d, int rep) {
    std::uint64_t d_bits = 0;
    static_assert(sizeof d_bits == sizeof d);
    std::memcpy(&d_bits, &d, sizeof d);
    std::uint64_t s = derive_seed(base_seed, static_cast<std::uint64_t>(n));
    s = derive_seed(s, d_bits);
    return derive_seed(s, static_cast<std::uint64_t>(rep));
}

BenchRecord time_one(const GenParams& params) {
    const DirectedGraph g = generate(params);
    BenchRecord r;
    r.n = params.n;
    r.d = params.d;
    r.seed = params.seed;
    r.convention = params.convention;
    const auto start = std::chrono::steady_clock::now();
    const Cpag pag = build_cpag(g, {}, &r.stages);
    r.total_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
                     .count();
    r.digest = pag_digest(pag.graph);
    return r;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& config) {
    if (config.reps < 1) {
        throw std::invalid_argument("reps must be at least 1");
    }
    struct Cell {
        int n;
        double d;
    };
    std::vector<Cell> cells;
    for (int n : config.sizes) {
        for (double d : config.densities) {
            cells.push_back({n, d});
        }
    }
    const auto params_for = [&](const Cell& c, int rep) {
        GenParams p;
        p.n = c.n;
        p.d = c.d;
        p.p_two = config.p_two;
        p.p_acy = config.p_acy;
        p.p_cyc = config.p_cyc;
        p.seed = cell_seed(config.base_seed, c.n, c.d, rep);
        p.convention = config.convention;
        return p;
    };
    // Fail on invalid parameters before spawning workers.
    for (const Cell& c : cells) {
        edge_budget(params_for(c, 0));
    }

    std::vector<std::vector<BenchRecord>> per_cell(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                time_one(params_for(cells[i], 0));
                for (int rep = 0; rep < config.reps; ++rep) {
                    per_cell[i].push_back(time_one(params_for(cells[i], rep)));
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const int threads = std::clamp(config.threads > 0 ? config.threads : default_thread_count(), 1,
                                   std::max(1, static_cast<int>(cells.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<BenchRecord> out;
    for (auto& records : per_cell) {
        out.insert(out.end(), records.begin(), records.end());
    }
    std::stable_sort(out.begin(), out.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.n != b.n) {
            return a.n < b.n;
        }
        if (a.d != b.d) {
            return a.d < b.d;
        }
        return a.seed < b.seed;
    });
    return out;
}

namespace {

void append_number(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void append_number(std::string& out, std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

}  // namespace

std::string emit_csv(const std::vector<BenchRecord>& records) {
    std::string out(csv_header);
    out += '\n';
    for (const BenchRecord& r : records) {
        append_number(out, static_cast<std::uint64_t>(r.n));
        out += ',';
        append_number(out, r.d);
        out += ',';
        append_number(out, r.seed);
        out += ',';
        out += to_string(r.convention);
        for (double us : r.stages.micros) {
            out += ',';
            append_number(out, us);
        }
        out += ',';
        append_number(out, r.total_us);
        out += ',';
        out += hex_digest(r.digest);
        out += '\n';
    }
    return out;
}

}  // namespace cyclequiv

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cyclequiv/bench.hpp"
#include "cyclequiv/cmag.hpp"
#include "cyclequiv/cpag.hpp"
#include "cyclequiv/dsep.hpp"
#include "cyclequiv/randgraph.hpp"
#include "cyclequiv/serialize.hpp"

namespace cyclequiv::cli {

namespace {

// Bad files, bad graphs or bad parameters: exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result that contradicts a property the construction guarantees: exit code 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

DirectedGraph read_graph(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return decode_directed(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

// Empty path or "-" writes to `out`.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        throw InputError("cannot write '" + path + "'");
    }
}

void require_same_size(const DirectedGraph& g1, const DirectedGraph& g2) {
    if (g1.size() != g2.size()) {
        throw InputError("graphs have different vertex counts (" + std::to_string(g1.size()) +
                         " and " + std::to_string(g2.size()) + ")");
    }
}

void check_cpag(const Cmag& m, const Cpag& p) {
    const MixedGraph& c = m.graph;
    for (const MixedEdge& e : c.edges()) {
        if (e.at_i == EdgeMark::Circle || e.at_j == EdgeMark::Circle) {
            throw InvariantViolation("CMAG contains a circle mark");
        }
    }
    for (const Triple& t : c.underlines()) {
        if (!c.underline_is_valid(t)) {
            throw InvariantViolation("CMAG underline is not an unshielded collider");
        }
    }
    if (p.graph.edge_count() != c.edge_count()) {
        throw InvariantViolation("CPAG skeleton differs from the CMAG skeleton");
    }
    for (const MixedEdge& e : p.graph.edges()) {
        if (!c.adjacent(e.i, e.j)) {
            throw InvariantViolation("CPAG skeleton differs from the CMAG skeleton");
        }
        if ((e.at_i != EdgeMark::Circle && e.at_i != *c.mark_at(e.i, e.j)) ||
            (e.at_j != EdgeMark::Circle && e.at_j != *c.mark_at(e.j, e.i))) {
            throw InvariantViolation("CPAG mark disagrees with the CMAG");
        }
    }
}

Cpag checked_cpag(const DirectedGraph& g) {
    const Cmag m = build_cmag(g);
    Cpag p = build_cpag(m);
    check_cpag(m, p);
    return p;
}

int verdict(bool equivalent, std::ostream& out) {
    out << (equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
    return equivalent ? exit_ok : exit_not_equivalent;
}

std::string triple_line(const char* tag, const Triple& t) {
    return std::string(tag) + ' ' + std::to_string(t.x) + ' ' + std::to_string(t.z) + ' ' +
           std::to_string(t.y) + '\n';
}

std::string classify_report(const DirectedGraph& g) {
    const Cmag m = build_cmag(g);
    const int n = g.size();
    std::ostringstream os;
    for (int c = 0; c < m.info.scc_count(); ++c) {
        const auto& members = m.info.scc_members(c);
        if (members.size() >= 2) {
            os << "scc";
            for (Vertex v : members) {
                os << ' ' << v;
            }
            os << '\n';
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (virtually_adjacent(g, a, b, m.info)) {
                os << "virtual-adjacent " << a << ' ' << b << '\n';
            }
        }
    }
    for (Vertex b = 0; b < n; ++b) {
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex c = a + 1; c < n; ++c) {
                if (a == b || c == b) {
                    continue;
                }
                const TripleClass tc = classify_triple(g, a, b, c, m.info);
                if (tc.kind != TripleKind::NotItinerary) {
                    os << "triple " << a << ' ' << b << ' ' << c << ' ' << to_string(tc.kind)
                       << (tc.shielded ? " shielded" : " unshielded") << '\n';
                }
            }
        }
    }
    for (const Triple& t : v_structures(m)) {
        os << triple_line("v-structure", t);
    }
    for (const Triple& t : m.graph.underlines()) {
        os << triple_line("virtual-v-structure", t);
    }
    for (const UStructure& u : u_structures(m)) {
        os << "u-structure " << u.x << ' ' << u.z << ' ' << u.z_end << ' ' << u.y << '\n';
    }
    for (const Triple& t : virtual_collider_triples(m).triples()) {
        os << triple_line("virtual-collider-triple", t);
    }
    if (n <= default_bruteforce_cap) {
        for (const MeConductorPair& p : find_me_conductor_pairs(g, m.info)) {
            os << "me-conductors";
            for (Vertex v : p.itinerary) {
                os << ' ' << v;
            }
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Markov equivalence of directed graphs with cycles", "cyclequiv");
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string g1_path;
    std::string g2_path;

    GenParams gen;
    std::string convention = "literal";
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random directed graph");
    gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("--d", gen.d, "Density")->required();
    gen_cmd->add_option("--ptwo", gen.p_two, "Share of the edge budget in 2-cycles")->required();
    gen_cmd->add_option("--pacy", gen.p_acy, "Share as acyclic arcs")->required();
    gen_cmd->add_option("--pcyc", gen.p_cyc, "Share as arbitrary arcs")->required();
    gen_cmd->add_option("--seed", gen.seed, "Seed")->required();
    gen_cmd->add_option("--convention", convention, "Edge budget: literal (n*d) or half (n*d/2)")
        ->check(CLI::IsMember({"literal", "half"}));
    gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* cmag_cmd = app.add_subcommand("cmag", "Write the CMAG of a graph");
    cmag_cmd->add_option("--in", in_path, "Input cdg file")->required();
    cmag_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* cpag_cmd = app.add_subcommand("cpag", "Write the CPAG of a graph");
    cpag_cmd->add_option("--in", in_path, "Input cdg file")->required();
    cpag_cmd->add_option("--out", out_path, "Output file (default stdout)");

    int max_n = default_bruteforce_cap;
    auto* equiv_cmd = app.add_subcommand("equiv", "Compare the CPAGs of two graphs");
    auto* cet_cmd = app.add_subcommand("cet", "Compare two graphs by the direct criterion");
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare all d-separations of two graphs");
    for (auto* cmd : {equiv_cmd, cet_cmd, oracle_cmd}) {
        cmd->add_option("--g1", g1_path, "First cdg file")->required();
        cmd->add_option("--g2", g2_path, "Second cdg file")->required();
    }
    oracle_cmd->add_option("--max-n", max_n, "Refuse graphs with more vertices")
        ->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "List the structures of a graph");
    classify_cmd->add_option("--in", in_path, "Input cdg file")->required();

    BenchConfig bench;
    std::string csv_path;
    auto* bench_cmd = app.add_subcommand("bench", "Time CPAG construction on random graphs");
    bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated vertex counts")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--densities", bench.densities, "Comma-separated densities")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench.reps, "Graphs per cell")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.base_seed, "Base seed");
    bench_cmd->add_option("--ptwo", bench.p_two, "Share of the edge budget in 2-cycles");
    bench_cmd->add_option("--pacy", bench.p_acy, "Share as acyclic arcs");
    bench_cmd->add_option("--pcyc", bench.p_cyc, "Share as arbitrary arcs");
    bench_cmd->add_option("--convention", convention, "Edge budget convention")
        ->check(CLI::IsMember({"literal", "half"}));
    bench_cmd->add_option("--threads", bench.threads, "Worker threads (default CYCLEQUIV_THREADS)");
    bench_cmd->add_option("--csv", csv_path, "Output CSV (default stdout)");

    int selftest_pairs = 300;
    int selftest_max_n = 6;
    std::uint64_t selftest_seed = 1;
    auto* selftest_cmd = app.add_subcommand("selftest", "Check the CPAG against brute force");
    selftest_cmd->add_option("--pairs", selftest_pairs, "Number of graph pairs")
        ->check(CLI::PositiveNumber);
    selftest_cmd->add_option("--max-n", selftest_max_n, "Largest vertex count")
        ->check(CLI::Range(3, default_bruteforce_cap));
    selftest_cmd->add_option("--seed", selftest_seed, "Seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    try {
        if (gen_cmd->parsed()) {
            gen.convention = parse_convention(convention);
            const DirectedGraph g = generate(gen);
            write_output(out_path, encode(g, describe(gen)), out);
            return exit_ok;
        }
        if (cmag_cmd->parsed()) {
            write_output(out_path, encode(build_cmag(read_graph(in_path)).graph), out);
            return exit_ok;
        }
        if (cpag_cmd->parsed()) {
            write_output(out_path, encode(checked_cpag(read_graph(in_path)).graph), out);
            return exit_ok;
        }
        if (equiv_cmd->parsed() || cet_cmd->parsed() || oracle_cmd->parsed()) {
            const DirectedGraph g1 = read_graph(g1_path);
            const DirectedGraph g2 = read_graph(g2_path);
            require_same_size(g1, g2);
            if (equiv_cmd->parsed()) {
                return verdict(pag_equal(checked_cpag(g1).graph, checked_cpag(g2).graph), out);
            }
            if (cet_cmd->parsed()) {
                return verdict(cet_equivalent(build_cmag(g1), build_cmag(g2)), out);
            }
            return verdict(markov_equivalent_bruteforce(g1, g2, max_n), out);
        }
        if (classify_cmd->parsed()) {
            out << classify_report(read_graph(in_path));
            return exit_ok;
        }
        if (bench_cmd->parsed()) {
            bench.convention = parse_convention(convention);
            write_output(csv_path, emit_csv(run_benchmark(bench)), out);
            return exit_ok;
        }
        if (selftest_cmd->parsed()) {
            const SelftestReport r =
                run_selftest(selftest_pairs, selftest_max_n, selftest_seed, err);
            out << "selftest: " << r.pairs << " pairs, " << r.equivalent << " equivalent, "
                << r.disagreements << " disagreements\n";
            return r.disagreements == 0 ? exit_ok : exit_internal_error;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const TooLargeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal_error;
    }
    err << "internal error: no command ran\n";
    return exit_internal_error;
}

}  // namespace cyclequiv::cli

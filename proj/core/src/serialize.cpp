#include "cyclequiv/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace cyclequiv {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::BadMagic:
            return "bad magic line";
        case ParseErrorKind::BadHeader:
            return "bad header";
        case ParseErrorKind::Malformed:
            return "malformed line";
        case ParseErrorKind::OutOfRange:
            return "vertex out of range";
        case ParseErrorKind::SelfLoop:
            return "self-loop";
        case ParseErrorKind::DuplicateEdge:
            return "duplicate edge";
        case ParseErrorKind::BadMark:
            return "bad edge mark";
        case ParseErrorKind::BadTriple:
            return "bad underline triple";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

namespace {

void write_comments(std::ostringstream& out, std::span<const std::string> comments) {
    for (const std::string& c : comments) {
        out << "# " << c << '\n';
    }
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Splits into non-empty logical lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
                ++i;
            }
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') {
                ++j;
            }
            if (j > i) {
                line.tokens.push_back(raw.substr(i, j - i));
            }
            i = j;
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return lines;
}

int parse_int(std::string_view tok, std::size_t line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(ParseErrorKind::Malformed, line,
                         "expected integer, got '" + std::string(tok) + "'");
    }
    return value;
}

Vertex parse_vertex(std::string_view tok, int n, std::size_t line) {
    const int v = parse_int(tok, line);
    if (v < 0 || v >= n) {
        throw ParseError(ParseErrorKind::OutOfRange, line,
                         std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
    }
    return v;
}

EdgeMark parse_mark(std::string_view tok, std::size_t line) {
    if (tok == "t") return EdgeMark::Tail;
    if (tok == "a") return EdgeMark::Arrow;
    if (tok == "o") return EdgeMark::Circle;
    throw ParseError(ParseErrorKind::BadMark, line, "'" + std::string(tok) + "'");
}

// Checks the magic and `n` lines; returns the vertex count and the index of the
// first body line.
std::pair<int, std::size_t> parse_header(const std::vector<Line>& lines, std::string_view magic) {
    if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != magic ||
        lines[0].tokens[1] != "1") {
        const std::size_t at = lines.empty() ? 1 : lines[0].number;
        throw ParseError(ParseErrorKind::BadMagic, at,
                         "expected '" + std::string(magic) + " 1'");
    }
    if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "n") {
        const std::size_t at = lines.size() < 2 ? lines[0].number + 1 : lines[1].number;
        throw ParseError(ParseErrorKind::BadHeader, at, "expected 'n <N>'");
    }
    const int n = parse_int(lines[1].tokens[1], lines[1].number);
    if (n < 0) {
        throw ParseError(ParseErrorKind::BadHeader, lines[1].number, "negative vertex count");
    }
    return {n, 2};
}

}  // namespace

std::string encode(const DirectedGraph& g, std::span<const std::string> comments) {
    std::ostringstream out;
    out << "cdg 1\n";
    write_comments(out, comments);
    out << "n " << g.size() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.from << ' ' << e.to << '\n';
    }
    return out.str();
}

std::string encode(const MixedGraph& g, std::span<const std::string> comments) {
    std::ostringstream out;
    out << "pag 1\n";
    write_comments(out, comments);
    out << "n " << g.size() << '\n';
    for (const MixedEdge& e : g.edges()) {
        out << "e " << e.i << ' ' << mark_symbol(e.at_i) << ' ' << e.j << ' '
            << mark_symbol(e.at_j) << '\n';
    }
    for (const Triple& t : g.underlines()) {
        out << "u " << t.x << ' ' << t.z << ' ' << t.y << '\n';
    }
    return out.str();
}

DirectedGraph decode_directed(std::string_view text) {
    const auto lines = tokenize(text);
    const auto [n, first] = parse_header(lines, "cdg");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t k = first; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] != "e" || line.tokens.size() != 3) {
            throw ParseError(ParseErrorKind::Malformed, line.number, "expected 'e <i> <j>'");
        }
        const Vertex i = parse_vertex(line.tokens[1], n, line.number);
        const Vertex j = parse_vertex(line.tokens[2], n, line.number);
        if (i == j) {
            throw ParseError(ParseErrorKind::SelfLoop, line.number, std::to_string(i));
        }
        if (!seen.insert({i, j}).second) {
            throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                             std::to_string(i) + " -> " + std::to_string(j));
        }
        edges.push_back({i, j});
    }
    return DirectedGraph(n, edges);
}

MixedGraph decode_mixed(std::string_view text) {
    const auto lines = tokenize(text);
    const auto [n, first] = parse_header(lines, "pag");
    MixedGraph g(n);
    std::vector<std::pair<Triple, std::size_t>> triples;
    for (std::size_t k = first; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const auto& tok = line.tokens;
        if (tok[0] == "e" && tok.size() == 5) {
            const Vertex i = parse_vertex(tok[1], n, line.number);
            const EdgeMark mi = parse_mark(tok[2], line.number);
            const Vertex j = parse_vertex(tok[3], n, line.number);
            const EdgeMark mj = parse_mark(tok[4], line.number);
            if (i == j) {
                throw ParseError(ParseErrorKind::SelfLoop, line.number, std::to_string(i));
            }
            if (i > j) {
                throw ParseError(ParseErrorKind::Malformed, line.number,
                                 "edge endpoints must satisfy i < j");
            }
            if (g.adjacent(i, j)) {
                throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                                 std::to_string(i) + " - " + std::to_string(j));
            }
            g.set_edge(i, mi, j, mj);
        } else if (tok[0] == "u" && tok.size() == 4) {
            const Triple t{parse_vertex(tok[1], n, line.number),
                           parse_vertex(tok[2], n, line.number),
                           parse_vertex(tok[3], n, line.number)};
            if (t.x >= t.y) {
                throw ParseError(ParseErrorKind::BadTriple, line.number,
                                 "outer vertices must satisfy x < y");
            }
            triples.emplace_back(t, line.number);
        } else {
            throw ParseError(ParseErrorKind::Malformed, line.number,
                             "expected 'e <i> <mi> <j> <mj>' or 'u <x> <z> <y>'");
        }
    }
    for (const auto& [t, number] : triples) {
        if (!g.underline_is_valid(t)) {
            throw ParseError(ParseErrorKind::BadTriple, number, "not an unshielded collider");
        }
        if (g.has_underline(t.x, t.z, t.y)) {
            throw ParseError(ParseErrorKind::BadTriple, number, "duplicate triple");
        }
        g.add_underline(t.x, t.z, t.y);
    }
    return g;
}

std::variant<DirectedGraph, MixedGraph> decode(std::string_view text) {
    const auto lines = tokenize(text);
    if (!lines.empty() && !lines[0].tokens.empty() && lines[0].tokens[0] == "pag") {
        return decode_mixed(text);
    }
    return decode_directed(text);
}

}  // namespace cyclequiv

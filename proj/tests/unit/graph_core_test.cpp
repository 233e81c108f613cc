#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"
#include "cyclequiv/permutation.hpp"
#include "cyclequiv/serialize.hpp"
#include "oracles.hpp"

namespace cyclequiv {
namespace {

TEST(DirectedGraph, StoresSortedParentsAndChildren) {
    const std::vector<Edge> edges{{2, 0}, {1, 0}, {0, 1}, {3, 2}};
    const DirectedGraph g(4, edges);
    EXPECT_EQ(g.size(), 4);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(g.parents(0), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(g.children(0), (std::vector<Vertex>{1}));
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_TRUE(g.adjacent(0, 2));
    EXPECT_FALSE(g.adjacent(1, 3));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 0}, {2, 0}, {3, 2}}));
}

TEST(DirectedGraph, RejectsInvalidArcs) {
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> dup{{0, 1}, {0, 1}};
    const std::vector<Edge> range{{0, 3}};
    const std::vector<Edge> negative{{-1, 0}};
    EXPECT_THROW(DirectedGraph(3, loop), std::invalid_argument);
    EXPECT_THROW(DirectedGraph(3, dup), std::invalid_argument);
    EXPECT_THROW(DirectedGraph(3, range), std::invalid_argument);
    EXPECT_THROW(DirectedGraph(3, negative), std::invalid_argument);
}

TEST(DirectedGraph, EmptyAndEquality) {
    const DirectedGraph a(3);
    EXPECT_EQ(a.edge_count(), 0u);
    EXPECT_TRUE(a.edges().empty());
    const std::vector<Edge> e1{{0, 1}, {1, 2}};
    const std::vector<Edge> e2{{1, 2}, {0, 1}};
    EXPECT_EQ(DirectedGraph(3, e1), DirectedGraph(3, e2));
    EXPECT_FALSE(DirectedGraph(3, e1) == a);
}

TEST(MixedGraph, MarksAndAdjacency) {
    MixedGraph m(4);
    m.set_edge(0, EdgeMark::Tail, 1, EdgeMark::Arrow);
    m.set_edge(2, EdgeMark::Tail, 1, EdgeMark::Tail);
    m.set_edge(3, EdgeMark::Circle, 1, EdgeMark::Arrow);
    EXPECT_TRUE(m.is_arc(0, 1));
    EXPECT_FALSE(m.is_arc(1, 0));
    EXPECT_TRUE(m.is_undirected(1, 2));
    EXPECT_TRUE(m.has_tail_at(2, 1));
    EXPECT_FALSE(m.has_tail_at(3, 1));
    EXPECT_EQ(m.mark_at(3, 1), EdgeMark::Circle);
    EXPECT_EQ(m.mark_at(0, 2), std::nullopt);
    EXPECT_EQ(m.neighbors(1), (std::vector<Vertex>{0, 2, 3}));
    EXPECT_EQ(m.edge_count(), 3u);

    m.set_edge(1, EdgeMark::Arrow, 0, EdgeMark::Arrow);  // overwrite keeps one edge
    EXPECT_EQ(m.edge_count(), 3u);
    EXPECT_EQ(m.mark_at(0, 1), EdgeMark::Arrow);
    m.set_mark(0, 1, EdgeMark::Tail);
    EXPECT_TRUE(m.is_arc(0, 1));
    EXPECT_THROW(m.set_mark(0, 2, EdgeMark::Tail), std::invalid_argument);
}

TEST(MixedGraph, UnderlinesAreCanonical) {
    MixedGraph m(3);
    m.set_edge(0, EdgeMark::Tail, 1, EdgeMark::Arrow);
    m.set_edge(2, EdgeMark::Tail, 1, EdgeMark::Arrow);
    EXPECT_TRUE(m.is_unshielded_collider(0, 1, 2));
    m.add_underline(2, 1, 0);
    EXPECT_TRUE(m.has_underline(0, 1, 2));
    EXPECT_TRUE(m.has_underline(2, 1, 0));
    EXPECT_EQ(m.underlines().begin()->x, 0);
    EXPECT_TRUE(m.underline_is_valid({0, 1, 2}));
    m.set_edge(0, EdgeMark::Tail, 2, EdgeMark::Tail);
    EXPECT_FALSE(m.is_unshielded_collider(0, 1, 2));
    EXPECT_FALSE(m.underline_is_valid({0, 1, 2}));
}

TEST(MixedGraph, PagEqualityComparesMarksAndUnderlines) {
    MixedGraph a(3);
    a.set_edge(0, EdgeMark::Circle, 1, EdgeMark::Arrow);
    MixedGraph b = a;
    EXPECT_TRUE(pag_equal(a, b));
    b.set_mark(0, 1, EdgeMark::Tail);
    EXPECT_FALSE(pag_equal(a, b));
    b = a;
    b.set_edge(2, EdgeMark::Circle, 1, EdgeMark::Arrow);
    a.set_edge(2, EdgeMark::Circle, 1, EdgeMark::Arrow);
    a.add_underline(0, 1, 2);
    EXPECT_FALSE(pag_equal(a, b));
    EXPECT_FALSE(pag_equal(MixedGraph(2), MixedGraph(3)));
}

TEST(Serialize, DirectedRoundTripIsByteStable) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const DirectedGraph g = oracle::gilbert_graph(1 + trial % 9, 0.3, rng);
        const std::string text = encode(g);
        EXPECT_EQ(decode_directed(text), g);
        EXPECT_EQ(encode(decode_directed(text)), text);
    }
}

TEST(Serialize, DirectedFormat) {
    const std::vector<Edge> edges{{1, 0}, {0, 1}, {2, 1}};
    const std::vector<std::string> comments{"made by hand"};
    EXPECT_EQ(encode(DirectedGraph(3, edges), comments),
              "cdg 1\n# made by hand\nn 3\ne 0 1\ne 1 0\ne 2 1\n");
    const DirectedGraph g = decode_directed("cdg 1\n\n# note\nn 3   # trailing\ne 2 1\ne 0 1\n");
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {2, 1}}));
}

TEST(Serialize, MixedRoundTrip) {
    MixedGraph m(4);
    m.set_edge(0, EdgeMark::Tail, 2, EdgeMark::Arrow);
    m.set_edge(1, EdgeMark::Circle, 2, EdgeMark::Arrow);
    m.set_edge(2, EdgeMark::Tail, 3, EdgeMark::Tail);
    m.add_underline(1, 2, 0);
    const std::string text = encode(m);
    EXPECT_EQ(text, "pag 1\nn 4\ne 0 t 2 a\ne 1 o 2 a\ne 2 t 3 t\nu 0 2 1\n");
    EXPECT_EQ(decode_mixed(text), m);
}

ParseErrorKind directed_error(const std::string& text) {
    try {
        decode_directed(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ParseErrorKind::Malformed;
}

ParseErrorKind mixed_error(const std::string& text) {
    try {
        decode_mixed(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ParseErrorKind::Malformed;
}

TEST(Serialize, DirectedErrors) {
    EXPECT_EQ(directed_error(""), ParseErrorKind::BadMagic);
    EXPECT_EQ(directed_error("pag 1\nn 2\n"), ParseErrorKind::BadMagic);
    EXPECT_EQ(directed_error("cdg 2\nn 2\n"), ParseErrorKind::BadMagic);
    EXPECT_EQ(directed_error("cdg 1\ne 0 1\n"), ParseErrorKind::BadHeader);
    EXPECT_EQ(directed_error("cdg 1\nn -1\n"), ParseErrorKind::BadHeader);
    EXPECT_EQ(directed_error("cdg 1\nn 2\ne 0\n"), ParseErrorKind::Malformed);
    EXPECT_EQ(directed_error("cdg 1\nn 2\ne 0 x\n"), ParseErrorKind::Malformed);
    EXPECT_EQ(directed_error("cdg 1\nn 2\nq 0 1\n"), ParseErrorKind::Malformed);
    EXPECT_EQ(directed_error("cdg 1\nn 2\ne 0 2\n"), ParseErrorKind::OutOfRange);
    EXPECT_EQ(directed_error("cdg 1\nn 2\ne 1 1\n"), ParseErrorKind::SelfLoop);
    EXPECT_EQ(directed_error("cdg 1\nn 2\ne 0 1\ne 0 1\n"), ParseErrorKind::DuplicateEdge);
}

TEST(Serialize, MixedErrors) {
    EXPECT_EQ(mixed_error("cdg 1\nn 2\n"), ParseErrorKind::BadMagic);
    EXPECT_EQ(mixed_error("pag 1\nn 2\ne 0 x 1 a\n"), ParseErrorKind::BadMark);
    EXPECT_EQ(mixed_error("pag 1\nn 2\ne 1 t 0 a\n"), ParseErrorKind::Malformed);
    EXPECT_EQ(mixed_error("pag 1\nn 2\ne 0 t 1 a\ne 0 a 1 t\n"), ParseErrorKind::DuplicateEdge);
    EXPECT_EQ(mixed_error("pag 1\nn 3\ne 0 t 1 a\nu 0 1 2\n"), ParseErrorKind::BadTriple);
    EXPECT_EQ(mixed_error("pag 1\nn 3\nu 0 1 5\n"), ParseErrorKind::OutOfRange);
}

TEST(Serialize, ErrorMessageNamesTheLine) {
    try {
        decode_directed("cdg 1\nn 2\ne 0 1\ne 0 5\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
}

TEST(Serialize, DecodeDispatchesOnMagic) {
    EXPECT_TRUE(std::holds_alternative<DirectedGraph>(decode("cdg 1\nn 1\n")));
    EXPECT_TRUE(std::holds_alternative<MixedGraph>(decode("pag 1\nn 1\n")));
    EXPECT_THROW(decode("xyz 1\nn 1\n"), ParseError);
}

TEST(Permutation, ValidatesAndInverts) {
    EXPECT_THROW(NodePermutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(NodePermutation({0, 3, 1}), std::invalid_argument);
    const NodePermutation p({2, 0, 1});
    EXPECT_EQ(p(0), 2);
    EXPECT_EQ(p.inverse()(2), 0);
    EXPECT_EQ(p.inverse().inverse(), p);
    EXPECT_EQ(NodePermutation::identity(3).image(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Permutation, RelabelsGraphs) {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 1}};
    const NodePermutation p({2, 0, 1});
    const DirectedGraph g = apply_permutation(DirectedGraph(3, edges), p);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 0}, {2, 0}}));
    EXPECT_EQ(apply_permutation(g, p.inverse()), DirectedGraph(3, edges));
    EXPECT_THROW(apply_permutation(DirectedGraph(2), p), std::invalid_argument);

    MixedGraph m(3);
    m.set_edge(0, EdgeMark::Tail, 1, EdgeMark::Arrow);
    m.set_edge(2, EdgeMark::Circle, 1, EdgeMark::Arrow);
    m.add_underline(0, 1, 2);
    const MixedGraph pm = apply_permutation(m, p);
    EXPECT_TRUE(pm.is_arc(2, 0));
    EXPECT_EQ(pm.mark_at(1, 0), EdgeMark::Circle);
    EXPECT_TRUE(pm.has_underline(2, 0, 1));
    EXPECT_EQ(apply_permutation(pm, p.inverse()), m);
}

}  // namespace
}  // namespace cyclequiv

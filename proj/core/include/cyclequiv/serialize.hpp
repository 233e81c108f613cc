#ifndef CYCLEQUIV_SERIALIZE_HPP
#define CYCLEQUIV_SERIALIZE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cyclequiv/directed_graph.hpp"
#include "cyclequiv/mixed_graph.hpp"

namespace cyclequiv {

// Text formats (UTF-8, LF):
//
//   cdg 1                    pag 1
//   n <N>                    n <N>
//   e <i> <j>                e <i> <mi> <j> <mj>    i < j, marks t|a|o
//                            u <x> <z> <y>          x < y
//
// `#` starts a comment. Encoders emit lines sorted by their numeric fields, so
// byte equality of encodings is graph equality.

enum class ParseErrorKind {
    BadMagic,
    BadHeader,
    Malformed,
    OutOfRange,
    SelfLoop,
    DuplicateEdge,
    BadMark,
    BadTriple,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

    ParseErrorKind kind() const { return kind_; }
    /// 1-based line number of the offending line (0 when not tied to a line).
    std::size_t line() const { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

/// `comments` are written as `# ...` lines directly below the magic line.
std::string encode(const DirectedGraph& g, std::span<const std::string> comments = {});
std::string encode(const MixedGraph& g, std::span<const std::string> comments = {});

DirectedGraph decode_directed(std::string_view text);
MixedGraph decode_mixed(std::string_view text);
/// Dispatches on the magic line.
std::variant<DirectedGraph, MixedGraph> decode(std::string_view text);

}  // namespace cyclequiv

#endif  // CYCLEQUIV_SERIALIZE_HPP

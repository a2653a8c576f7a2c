#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pegging/graph.hpp"

namespace peg {

// Malformed DSL or edge-list text. `position` is the 0-based offset into
// the input (or into the line for edge lists, with `line` set).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position, std::size_t line = 0);
    std::size_t position() const { return position_; }
    std::size_t line() const { return line_; }

private:
    std::size_t position_;
    std::size_t line_;
};

// "path:7", "star:5", "ary:2,8", "cat:1,0,2,1", "lobster:(1,2),(0),(3)".
// A lobster spine vertex without legs is written "()".
FamilySpec parse_family_spec(std::string_view text);

// First line "n m", then m lines "u v" with 0-based ids. Blank lines and
// lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);

struct GraphInput {
    std::optional<FamilySpec> family;
    Graph graph;
    std::string canonical;  // DSL string, or the sorted edge list
};

// Family DSL, or the path of an edge-list file when `text` names an
// existing file.
GraphInput load_graph_spec(const std::string& text);

// Canonical text of a graph without a family: "n;u-v;u-v;..." over the
// sorted edge list.
std::string canonical_edge_text(const Graph& g);

}  // namespace peg

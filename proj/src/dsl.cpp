#include "pegging/dsl.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace peg {

ParseError::ParseError(const std::string& message, std::size_t position, std::size_t line)
    : std::invalid_argument(message), position_(position), line_(line) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    void skip(std::size_t n) { pos_ += n; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
        throw ParseError("syntax error at column " + std::to_string(at + 1) + ": " + what + "\n  " + std::string(text_) +
                             "\n  " + std::string(at, ' ') + "^",
                         at);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::size_t integer() {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer");
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) fail_at("integer out of range", start);
        return value;
    }

    std::vector<std::size_t> integer_list() {
        std::vector<std::size_t> out{integer()};
        while (accept(',')) out.push_back(integer());
        return out;
    }

    void end() {
        if (!done()) fail("unexpected trailing input");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void require(bool ok, const Cursor& c, std::size_t at, const std::string& what) {
    if (!ok) c.fail_at("parameter out of range: " + what, at);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
    Cursor c(text);
    const auto colon = text.find(':');
    if (text.empty()) throw ParseError("empty graph spec", 0);
    if (colon == std::string_view::npos) c.fail_at("expected '<family>:<parameters>'", text.size());
    const std::string_view name = text.substr(0, colon);
    c.skip(colon);
    c.expect(':');
    const std::size_t at = c.pos();

    if (name == "path") {
        const std::size_t n = c.integer();
        c.end();
        require(n >= 1, c, at, "path needs n >= 1");
        return PathSpec{n};
    }
    if (name == "star") {
        const std::size_t n = c.integer();
        c.end();
        require(n >= 2, c, at, "star needs n >= 2");
        return StarSpec{n};
    }
    if (name == "ary") {
        const std::size_t b = c.integer();
        c.expect(',');
        const std::size_t h = c.integer();
        c.end();
        require(b >= 1, c, at, "ary needs branching >= 1");
        return ArySpec{b, h};
    }
    if (name == "cat") {
        auto leaves = c.integer_list();
        c.end();
        return CaterpillarSpec{std::move(leaves)};
    }
    if (name == "lobster") {
        LobsterSpec spec;
        do {
            c.expect('(');
            std::vector<std::size_t> legs;
            if (c.peek() != ')') legs = c.integer_list();
            c.expect(')');
            spec.legs.push_back(std::move(legs));
        } while (c.accept(','));
        c.end();
        return spec;
    }
    c.fail_at("unknown family '" + std::string(name) + "' (expected path, star, ary, cat or lobster)", 0);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& what, std::size_t col) {
        throw ParseError("edge list line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) + ": " + what,
                         col, line_no);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t pos = first;
        auto number = [&]() {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            const std::size_t start = pos;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
            if (start == pos) fail("expected a nonnegative integer", start);
            std::size_t v = 0;
            if (std::from_chars(line.data() + start, line.data() + pos, v).ec != std::errc{}) fail("integer out of range", start);
            return v;
        };
        const std::size_t a = number();
        const std::size_t b = number();
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos != line.size()) fail("unexpected trailing input", pos);
        if (!header) {
            header = {a, b};
            continue;
        }
        if (a >= header->first) fail("vertex " + std::to_string(a) + " out of range", first);
        if (b >= header->first) fail("vertex " + std::to_string(b) + " out of range", first);
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (!header) throw ParseError("edge list is empty; expected header 'n m'", 0, 1);
    if (edges.size() != header->second) {
        throw ParseError("edge list declares " + std::to_string(header->second) + " edges but has " +
                             std::to_string(edges.size()),
                         0, line_no);
    }
    return Graph::from_edges(header->first, edges);
}

std::string canonical_edge_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    for (const auto& [u, v] : g.edges()) out += ";" + std::to_string(u) + "-" + std::to_string(v);
    return out;
}

GraphInput load_graph_spec(const std::string& text) {
    if (text.empty()) throw ParseError("empty graph spec", 0);
    std::error_code ec;
    if (text.find(':') == std::string::npos && std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        GraphInput out;
        out.graph = parse_edge_list(buf.str());
        out.canonical = canonical_edge_text(out.graph);
        return out;
    }
    GraphInput out;
    out.family = parse_family_spec(text);
    out.graph = build_family(*out.family).graph;
    out.canonical = to_dsl(*out.family);
    return out;
}

}  // namespace peg

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace peg {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

struct PathSpec {
    std::size_t n = 1;
};
struct StarSpec {
    std::size_t n = 2;
};
struct ArySpec {
    std::size_t branching = 2;
    std::size_t height = 0;
};
struct CaterpillarSpec {
    std::vector<std::size_t> leaves;  // leaf count per spine vertex
};
// Each spine vertex carries legs; a leg is a middle vertex with that many
// leaves hanging off it. A leg with zero leaves is a plain leaf.
struct LobsterSpec {
    std::vector<std::vector<std::size_t>> legs;
};

using FamilySpec = std::variant<PathSpec, StarSpec, ArySpec, CaterpillarSpec, LobsterSpec>;

// Canonical family DSL string, e.g. "ary:2,8" or "lobster:(1,2),(0),(3)".
std::string to_dsl(const FamilySpec& spec);

// Immutable undirected simple graph in compressed adjacency form. Neighbor
// lists are sorted.
class Graph {
public:
    Graph() = default;

    // Validates ids, rejects self-loops and duplicate edges.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::optional<std::string> tag = {});

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(VertexId u, VertexId v) const;

    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    const std::optional<std::string>& family_tag() const { return tag_; }

    bool is_connected() const;
    bool is_tree() const { return vertex_count() > 0 && edge_count() + 1 == vertex_count() && is_connected(); }

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> neighbors_;
    std::optional<std::string> tag_;
};

struct RootedView {
    VertexId root = 0;
    std::vector<std::uint32_t> level;
    std::vector<std::optional<VertexId>> parent;
};

RootedView rooted_at(const Graph& g, VertexId root);

struct Family {
    Graph graph;
    std::optional<RootedView> rooted;  // present for b-ary trees
};

// Throws std::invalid_argument on out-of-range parameters. Vertices are
// numbered in BFS order from the root (ary), center (star), path end, or
// first spine vertex (caterpillar, lobster).
Family build_family(const FamilySpec& spec);

// Vertex count of Ary(b, h) without building it; nullopt on overflow.
std::optional<std::size_t> ary_vertex_count(std::size_t b, std::size_t h);

std::vector<std::uint32_t> distances_from(const Graph& g, VertexId t);

struct LongestPath {
    std::size_t diameter = 0;
    std::vector<VertexId> path;  // diameter + 1 vertices
};

// Double BFS on trees, all-pairs BFS otherwise. Requires a connected graph.
LongestPath diameter_and_longest_path(const Graph& g);

// Degree-1 vertices; a single-vertex graph is its own leaf.
std::vector<VertexId> leaves(const Graph& g);

// Graph with vertex v deleted, remaining vertices renumbered in increasing
// order of their old ids.
Graph remove_vertex(const Graph& g, VertexId v);

// Non-leaf vertices form a path (or at most one vertex).
bool is_caterpillar(const Graph& g);
bool is_lobster(const Graph& g);

}  // namespace peg

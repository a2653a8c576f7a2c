#pragma once

#include <random>
#include <string>
#include <vector>

#include "pegging/graph.hpp"

namespace peg {

struct NamedGraph {
    std::string name;
    Graph graph;
};

// AHU encoding of a tree rooted at its center (the lexicographically
// smaller encoding for bicentral trees). Equal iff isomorphic.
std::string canonical_tree_form(const Graph& tree);

// Tree from a Prufer sequence over n = seq.size() + 2 vertices.
Graph tree_from_prufer(std::span<const VertexId> seq);

// All non-isomorphic trees on n vertices (1 <= n <= 9), sorted by
// canonical form.
std::vector<Graph> nonisomorphic_trees(std::size_t n);

// Uniform labelled tree on n vertices.
Graph random_tree(std::size_t n, std::mt19937_64& rng);

// Random caterpillar spec with at most max_n vertices and diameter >= 2.
CaterpillarSpec random_caterpillar(std::size_t max_n, std::mt19937_64& rng);

// Non-tree validation graphs: cycles, complete graphs, a 3x3 grid and the
// Petersen graph.
std::vector<NamedGraph> validation_graphs();

// Test corpus up to max_n vertices: all non-isomorphic trees on up to 7
// vertices, paths, stars, a few caterpillars and lobsters, and the
// validation graphs.
std::vector<NamedGraph> corpus(std::size_t max_n);

}  // namespace peg

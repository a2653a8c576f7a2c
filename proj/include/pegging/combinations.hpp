#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pegging/graph.hpp"

namespace peg {

// C(n, k); throws std::overflow_error past 2^64.
std::uint64_t binomial(std::size_t n, std::size_t k);

// k-subsets of {0..n-1} in lexicographic order of their sorted elements.
// Rank 0 is {0, 1, ..., k-1}.
std::vector<VertexId> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);
std::uint64_t rank_combination(std::size_t n, std::span<const VertexId> combo);

// Advances to the lexicographic successor; false after the last subset.
bool next_combination(std::vector<VertexId>& combo, std::size_t n);

}  // namespace peg

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pegging/golden.hpp"
#include "pegging/graph.hpp"
#include "pegging/state.hpp"

namespace peg {

struct WeightReport {
    std::vector<VertexId> targets;
    GoldenNumber value;
    double float_hint = 0.0;
};

WeightReport make_weight_report(std::vector<VertexId> targets, GoldenNumber value);

// sum of w^{d(v,t)} over v in D; zero for an empty distribution.
GoldenNumber distribution_weight(const Graph& g, VertexId t, const Distribution& d);

// Same value from a precomputed distance vector.
GoldenNumber distribution_weight(std::span<const std::uint32_t> dist_to_t, const Distribution& d);

// w_L(x) = sum over t in L of w_t(x).
GoldenNumber summed_weight(const Graph& g, std::span<const VertexId> targets, VertexId x);
GoldenNumber summed_weight(const Graph& g, std::span<const VertexId> targets, const Distribution& d);

// w_L(v) for every vertex v, exact. Accumulates a per-vertex distance
// histogram over all targets, then folds it through w-powers. The parallel
// kernel splits targets across OpenMP threads; the serial one is the
// reference it is tested against.
std::vector<GoldenNumber> summed_weights_all(const Graph& g, std::span<const VertexId> targets);
std::vector<GoldenNumber> summed_weights_all_serial(const Graph& g, std::span<const VertexId> targets);

struct WeightCertificate {
    VertexId target = 0;
    GoldenNumber weight;  // strictly below 1
};

// A certificate exists iff w_t(D) < 1, proving t unreachable. No
// certificate says nothing about reachability.
std::optional<WeightCertificate> weight_unreachability_certificate(const Graph& g, const Distribution& d, VertexId t);

// Smallest k such that the k largest summed weights reach |L|.
std::size_t optimal_lower_bound(const Graph& g, std::span<const VertexId> targets);

// Closed forms on the complete binary tree of height h (L = leaves).
GoldenNumber binary_root_weight_closed(unsigned h);
GoldenNumber binary_summed_weight_closed(unsigned h, unsigned level);

// Levels 0..h in strictly decreasing order of summed leaf weight. h >= 6.
std::vector<unsigned> binary_level_ranking(unsigned h);

// w_L(v_a) / w_L(v_b) for vertices at levels a and b.
GoldenNumber binary_level_ratio(unsigned h, unsigned level_a, unsigned level_b);

// Exact w_L of the distribution occupying levels 0..h-4 of T_h.
GoldenNumber binary_top_levels_summed_weight(unsigned h);

struct DistanceCensus {
    std::uint32_t distance = 0;
    std::size_t pegged = 0;
    std::size_t empty = 0;
};

struct AdversarialOptions {
    // Height of the peg-free subtree that contains the target leaf.
    unsigned excluded_height = 8;
    // How many of the nearest occupied distance classes are emptied before
    // refilling from the far side.
    unsigned stripped_classes = 4;
};

struct AdversarialCertificate {
    unsigned height = 0;
    VertexId target = 0;
    std::size_t vertex_count = 0;
    Distribution base;
    GoldenNumber base_weight;
    Distribution refined;
    GoldenNumber refined_weight;
    std::vector<DistanceCensus> census;  // for the base distribution
    std::vector<std::uint32_t> stripped_distances;
    std::size_t removed_pegs = 0;
    std::size_t added_pegs = 0;
    // |V| - |D'|; the implied bound is P(T_h) >= |V| - (empty_vertices - 1).
    std::size_t empty_vertices = 0;
    static constexpr std::size_t kClaimedBudget = 172;
};

// Builds the adversarial distribution on Ary(2, h) against the first leaf:
// every vertex outside the excluded subtree is pegged, the nearest occupied
// distance classes are emptied, and empty vertices are refilled farthest
// first (ties by vertex id) while the exact weight stays below 1. Throws
// std::invalid_argument for h < 14 and std::logic_error if the base
// distribution is not itself certified.
AdversarialCertificate binary_adversarial_distribution(unsigned h, const AdversarialOptions& options = {});

}  // namespace peg

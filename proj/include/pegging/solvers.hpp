#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pegging/engine.hpp"
#include "pegging/graph.hpp"
#include "pegging/state.hpp"

namespace peg {

enum class Quantity : std::uint8_t { pegging_number, optimal_pegging_number };
enum class BoundKind : std::uint8_t { weight_greedy, trivial };
enum class Execution : std::uint8_t { parallel, serial };

std::string to_string(Quantity q);
std::string to_string(BoundKind k);

struct SolveReport {
    std::string family;  // DSL string or "edges"
    std::size_t n = 0;
    Quantity quantity = Quantity::optimal_pegging_number;
    std::optional<std::size_t> value;             // nullopt: unknown under budget
    std::optional<Distribution> witness;          // p: first pegging distribution found
    std::optional<Distribution> counterexample;   // P: a size-(P-1) distribution that fails
    std::size_t lower_bound = 0;
    BoundKind lower_bound_kind = BoundKind::trivial;
    std::size_t states = 0;
    double millis = 0.0;
    std::string version;
};

// Lower bound used to seed the p search: the greedy weight bound with
// L = leaves on trees and L = V otherwise, raised to 2 when n >= 2.
std::pair<std::size_t, BoundKind> optimal_seed_bound(const Graph& g);

// p(G). For each k from the seed bound, distributions of size k are tried in
// lexicographic order; the witness is the first one that pegs G. Contiguous
// rank ranges run in parallel and the smallest pegging rank wins, so the
// answer does not depend on scheduling.
SolveReport optimal_pegging_number(const Graph& g, const SearchBudget& budget = {}, Execution exec = Execution::parallel);

// P(G). Searches k upward from p(G); candidates of each size are tried in
// order of increasing min_t w_t(D), then rank. The counterexample is the
// first failing candidate in that order.
SolveReport pegging_number(const Graph& g, const SearchBudget& budget = {}, Execution exec = Execution::parallel);

// A distribution of p(P_n) pegs on Path(n) found by search, verified.
Distribution path_optimal_distribution(std::size_t n, const SearchBudget& budget = {});

// Path-optimal distribution placed along a longest path. Rejects
// non-caterpillars; throws std::logic_error if the result fails to verify.
Distribution caterpillar_distribution(const Graph& g, const SearchBudget& budget = {});

// Interior of a longest path (d - 1 pegs). Rejects non-lobsters and d < 5.
Distribution lobster_distribution(const Graph& g, const SearchBudget& budget = {});

// F_k with F_1 = F_2 = 1.
std::uint64_t fibonacci(unsigned k);

// Recursive construction D_h on Ary(b, h). Rejects b < F_{h+3} - 2.
Distribution fibonacci_distribution(std::size_t b, std::size_t h);

struct VerifyReport {
    std::vector<TargetOutcome> targets;  // indexed by vertex
    CoverVerdict verdict = CoverVerdict::unknown;
    SearchStats stats;
};

// Runs query_target for every vertex (in parallel).
VerifyReport verify_pegs(const Graph& g, const Distribution& d, const SearchBudget& budget = {});

struct ProbabilityEstimate {
    std::size_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t unknown = 0;  // counted as trials, not as successes
    bool exact = false;         // every size-k distribution was checked
    double estimate = 0.0;
    double standard_error = 0.0;  // zero when exact
};

inline constexpr std::uint64_t kExhaustiveProbabilityCap = 20'000;

// Fraction of size-k distributions that peg g. Enumerates when
// C(n, k) <= cap, otherwise samples distinct distributions uniformly.
ProbabilityEstimate peg_probability(const Graph& g, std::size_t k, std::uint64_t samples, std::uint64_t seed,
                                    const SearchBudget& budget = {},
                                    std::uint64_t exhaustive_cap = kExhaustiveProbabilityCap);

struct LeafRemovalRow {
    VertexId leaf = 0;
    std::optional<std::size_t> p_before;
    std::optional<std::size_t> p_after;
    bool increases = false;
};

// p(g) and p(g - leaf) for each leaf of a tree with n >= 3.
std::vector<LeafRemovalRow> leaf_removal_scan(const Graph& g, const SearchBudget& budget = {});

}  // namespace peg

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pegging/golden.hpp"
#include "pegging/graph.hpp"
#include "pegging/state.hpp"

namespace peg {

struct SearchBudget {
    std::size_t max_states = 1'000'000;    // exhaustive searches
    std::size_t max_expansions = 100'000;  // best-first witness search
};

enum class Status : std::uint8_t { reachable, unreachable, unknown };
enum class EvidenceKind : std::uint8_t { witness, weight_certificate, exhausted_state_space, budget_exhausted };

std::string to_string(Status s);
std::string to_string(EvidenceKind e);

struct TargetOutcome {
    VertexId vertex = 0;
    Status status = Status::unknown;
    EvidenceKind evidence = EvidenceKind::budget_exhausted;
    std::vector<Move> witness;           // set when reachable
    std::optional<GoldenNumber> weight;  // set for weight certificates
};

struct SearchStats {
    std::size_t states = 0;
    std::size_t expansions = 0;
    bool complete = false;  // the whole (restricted) state space was explored

    SearchStats& operator+=(const SearchStats& o) {
        states += o.states;
        expansions += o.expansions;
        return *this;
    }
};

struct ReachOutcome {
    std::vector<TargetOutcome> targets;  // indexed by vertex
    SearchStats stats;

    bool pegs_all() const;
    bool any_unknown() const;
    std::vector<VertexId> reachable() const;
};

// Searches address vertices with fixed-width bit states; graphs above this
// size are rejected by the exhaustive and witness searches.
inline constexpr std::size_t kMaxSearchVertices = 1024;

// Legal moves under `mode`, sorted by (from, over, to). Landing on an
// occupied vertex is reported as a stacking move, a double peg jumping off
// itself as a pebbling move.
std::vector<Move> legal_moves(const Graph& g, const Distribution& d, Mode mode);
std::vector<Move> legal_moves(const Graph& g, const MultiDistribution& d, Mode mode);

// Throws std::invalid_argument naming the violated rule.
Distribution apply_move(const Graph& g, const Distribution& d, const Move& m);
MultiDistribution apply_move(const Graph& g, const MultiDistribution& d, const Move& m);

// Exhaustive memoized breadth-first exploration of the distribution
// meta-graph. Witnesses are shortest and always replay-checked.
ReachOutcome reach_set(const Graph& g, const Distribution& d, Mode mode, const SearchBudget& budget = {});

// Exhaustive search for one target on a tree, expanding only moves whose
// landing vertex is strictly closer to t than the jumping peg.
TargetOutcome reach_target_tree_directed(const Graph& g, const Distribution& d, VertexId t,
                                         const SearchBudget& budget = {}, SearchStats* stats = nullptr);

// Best-first search ordered by exact w_t (heaviest first), then fewer pegs,
// then lexicographic state. Uses stacking moves, restricted to toward-t
// moves on trees. Returns reachable or unknown, never unreachable.
TargetOutcome witness_search(const Graph& g, const Distribution& d, VertexId t, const SearchBudget& budget = {},
                             SearchStats* stats = nullptr);

// Default per-target pipeline: weight certificate, witness search, then
// exhaustive search (toward-t on trees).
TargetOutcome query_target(const Graph& g, const Distribution& d, VertexId t, const SearchBudget& budget = {},
                           SearchStats* stats = nullptr);

namespace detail {

// For every "over" vertex v, the (from, to) pairs of jumps across it.
struct JumpTable {
    struct Jump {
        VertexId from;
        VertexId to;
    };
    std::vector<std::size_t> offsets;
    std::vector<Jump> jumps;

    std::span<const Jump> across(VertexId v) const { return {jumps.data() + offsets[v], jumps.data() + offsets[v + 1]}; }
};

}  // namespace detail

enum class CoverVerdict : std::uint8_t { pegs, does_not_peg, unknown };

// Does R(D) = V(G)? Weight certificates first, then one exhaustive proper
// search that stops as soon as every vertex has been covered.
CoverVerdict covers_graph(const Graph& g, const Distribution& d, const SearchBudget& budget = {},
                          SearchStats* stats = nullptr);

// covers_graph with the per-graph tables (jumps, w-powers of all pairwise
// distances) built once. Read-only after construction, so one checker can
// serve many threads.
class CoverChecker {
public:
    explicit CoverChecker(const Graph& g);

    CoverVerdict check(const Distribution& d, const SearchBudget& budget = {}, SearchStats* stats = nullptr) const;

    // min over t not in D of w_t(D); nullopt when D covers every vertex.
    std::optional<OmegaInt> min_target_weight(const Distribution& d) const;
    OmegaInt weight(VertexId t, const Distribution& d) const;

    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;
    std::vector<OmegaInt> power_;  // power_[t * n + v] = w^{d(v,t)}
    detail::JumpTable jumps_;
};

struct FinalPeg {
    VertexId vertex = 0;
    Distribution ancestors;  // subset of the initial distribution
};

struct AncestorReplay {
    MultiDistribution final_state;
    std::vector<FinalPeg> pegs;  // sorted by vertex; stacked pegs bottom first
};

// Replays moves (any kind) tracking which initial pegs contributed to each
// final peg. Throws std::invalid_argument naming the first illegal index.
AncestorReplay replay_with_ancestors(const Graph& g, const Distribution& d0, std::span<const Move> moves);

// True iff the moves replay legally from d0 and leave a peg on t.
bool witness_reaches(const Graph& g, const Distribution& d0, std::span<const Move> moves, VertexId t);

}  // namespace peg

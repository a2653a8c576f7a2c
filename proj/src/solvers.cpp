#include "pegging/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "pegging/combinations.hpp"
#include "pegging/version.hpp"
#include "pegging/weights.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace peg {

std::string to_string(Quantity q) {
    return q == Quantity::pegging_number ? "pegging_number" : "optimal_pegging_number";
}

std::string to_string(BoundKind k) {
    return k == BoundKind::weight_greedy ? "weight-greedy" : "trivial";
}

namespace {

constexpr std::uint64_t kNoRank = UINT64_MAX;
constexpr std::uint64_t kChunk = 32;

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
    std::uint64_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

void require_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
}

SolveReport blank_report(const Graph& g, Quantity q) {
    SolveReport r;
    r.family = g.family_tag().value_or("edges");
    r.n = g.vertex_count();
    r.quantity = q;
    r.version = kToolVersion;
    return r;
}

struct SizeScan {
    std::uint64_t hit = kNoRank;      // smallest rank (or position) satisfying the query
    std::uint64_t unknown = kNoRank;  // smallest rank with an unknown verdict
    std::size_t states = 0;
};

// Visits the items 0..total-1 in chunks, where item i is the distribution
// produced by `nth(i)`, and finds the smallest i whose verdict is `wanted`.
template <class Nth>
SizeScan scan(const CoverChecker& checker, std::uint64_t total, CoverVerdict wanted, const SearchBudget& budget,
              Execution exec, Nth&& nth) {
    std::atomic<std::uint64_t> hit{kNoRank};
    std::atomic<std::uint64_t> unknown{kNoRank};
    std::atomic<std::size_t> states{0};
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = c * kChunk;
        if (begin >= hit.load()) return;
        const std::uint64_t end = std::min(total, begin + kChunk);
        SearchStats stats;
        for (std::uint64_t i = begin; i < end && i < hit.load(); ++i) {
            const CoverVerdict v = checker.check(nth(i), budget, &stats);
            if (v == wanted) {
                atomic_min(hit, i);
                break;
            }
            if (v == CoverVerdict::unknown) atomic_min(unknown, i);
        }
        states += stats.states;
    };
    if (exec == Execution::parallel) {
        const auto count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < count; ++c) run_chunk(static_cast<std::uint64_t>(c));
    } else {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    }
    return {hit.load(), unknown.load(), states.load()};
}

Distribution distribution_at(std::size_t n, std::size_t k, std::uint64_t rank) {
    return Distribution::of(n, unrank_combination(n, k, rank));
}

// All size-k distributions, ordered by min_t w_t(D) and then by rank.
std::vector<std::uint64_t> weight_order(const CoverChecker& checker, std::size_t k, Execution exec) {
    const std::size_t n = checker.graph().vertex_count();
    const std::uint64_t total = binomial(n, k);
    std::vector<OmegaInt> key(total);
    std::vector<Distribution> all(total);
    std::vector<VertexId> combo(k);
    std::iota(combo.begin(), combo.end(), VertexId{0});
    for (std::uint64_t r = 0; r < total; ++r) {
        all[r] = Distribution::of(n, combo);
        next_combination(combo, n);
    }
    const auto count = static_cast<std::int64_t>(total);
    const OmegaInt none{std::int64_t{1} << 40, 0};
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t r = 0; r < count; ++r) {
        key[static_cast<std::size_t>(r)] = checker.min_target_weight(all[static_cast<std::size_t>(r)]).value_or(none);
    }
    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) { return key[a] < key[b]; });
    return order;
}

}  // namespace

std::pair<std::size_t, BoundKind> optimal_seed_bound(const Graph& g) {
    require_connected(g);
    const std::size_t n = g.vertex_count();
    if (n == 1) return {1, BoundKind::trivial};
    std::vector<VertexId> targets;
    if (g.is_tree()) {
        targets = leaves(g);
    } else {
        targets.resize(n);
        std::iota(targets.begin(), targets.end(), VertexId{0});
    }
    const std::size_t greedy = optimal_lower_bound(g, targets);
    if (greedy >= 2) return {greedy, BoundKind::weight_greedy};
    return {2, BoundKind::trivial};
}

SolveReport optimal_pegging_number(const Graph& g, const SearchBudget& budget, Execution exec) {
    const auto start = Clock::now();
    require_connected(g);
    SolveReport r = blank_report(g, Quantity::optimal_pegging_number);
    const std::size_t n = g.vertex_count();
    std::tie(r.lower_bound, r.lower_bound_kind) = optimal_seed_bound(g);
    const CoverChecker checker(g);
    for (std::size_t k = r.lower_bound; k <= n; ++k) {
        const SizeScan s = scan(checker, binomial(n, k), CoverVerdict::pegs, budget, exec,
                                [&](std::uint64_t i) { return distribution_at(n, k, i); });
        r.states += s.states;
        if (s.hit != kNoRank) {
            r.value = k;
            r.witness = distribution_at(n, k, s.hit);
            break;
        }
        if (s.unknown != kNoRank) break;
    }
    r.millis = millis_since(start);
    return r;
}

SolveReport pegging_number(const Graph& g, const SearchBudget& budget, Execution exec) {
    const auto start = Clock::now();
    SolveReport r = blank_report(g, Quantity::pegging_number);
    const SolveReport p = optimal_pegging_number(g, budget, exec);
    r.lower_bound = p.lower_bound;
    r.lower_bound_kind = p.lower_bound_kind;
    r.states = p.states;
    if (!p.value) {
        r.millis = millis_since(start);
        return r;
    }
    const std::size_t n = g.vertex_count();
    const CoverChecker checker(g);
    for (std::size_t k = *p.value; k <= n; ++k) {
        const auto order = weight_order(checker, k, exec);
        const SizeScan s = scan(checker, order.size(), CoverVerdict::does_not_peg, budget, exec,
                                [&](std::uint64_t i) { return distribution_at(n, k, order[i]); });
        r.states += s.states;
        if (s.hit != kNoRank) {
            r.counterexample = distribution_at(n, k, order[s.hit]);
            continue;
        }
        if (s.unknown != kNoRank) break;
        r.value = k;
        if (!r.counterexample) {
            // Every distribution below p fails; report the lightest one.
            const auto below = weight_order(checker, k - 1, exec);
            r.counterexample = distribution_at(n, k - 1, below.front());
        }
        break;
    }
    r.millis = millis_since(start);
    return r;
}

Distribution path_optimal_distribution(std::size_t n, const SearchBudget& budget) {
    if (n == 0) throw std::invalid_argument("path_optimal_distribution: n must be at least 1");
    const Family path = build_family(PathSpec{n});
    const SolveReport r = optimal_pegging_number(path.graph, budget);
    if (!r.value) throw std::runtime_error("path_optimal_distribution: budget exhausted for n=" + std::to_string(n));
    if (covers_graph(path.graph, *r.witness, budget) != CoverVerdict::pegs) {
        throw std::logic_error("path_optimal_distribution: witness failed to verify");
    }
    return *r.witness;
}

Distribution caterpillar_distribution(const Graph& g, const SearchBudget& budget) {
    if (!g.is_tree() || !is_caterpillar(g)) throw std::invalid_argument("caterpillar_distribution: graph is not a caterpillar");
    const LongestPath lp = diameter_and_longest_path(g);
    Distribution d(g.vertex_count());
    if (lp.diameter < 2) {
        const SolveReport r = optimal_pegging_number(g, budget);
        if (!r.value) throw std::runtime_error("caterpillar_distribution: budget exhausted");
        d = *r.witness;
    } else {
        const Distribution on_path = path_optimal_distribution(lp.path.size(), budget);
        for (VertexId i : on_path.vertices()) d.insert(lp.path[i]);
    }
    if (covers_graph(g, d, budget) != CoverVerdict::pegs) {
        throw std::logic_error("caterpillar_distribution: distribution " + d.to_string() + " does not peg the graph");
    }
    return d;
}

Distribution lobster_distribution(const Graph& g, const SearchBudget& budget) {
    if (!g.is_tree() || !is_lobster(g)) throw std::invalid_argument("lobster_distribution: graph is not a lobster");
    const LongestPath lp = diameter_and_longest_path(g);
    if (lp.diameter < 5) {
        throw std::invalid_argument("lobster_distribution: diameter " + std::to_string(lp.diameter) + " is below 5");
    }
    Distribution d(g.vertex_count());
    for (std::size_t i = 1; i + 1 < lp.path.size(); ++i) d.insert(lp.path[i]);
    if (covers_graph(g, d, budget) != CoverVerdict::pegs) {
        throw std::logic_error("lobster_distribution: distribution " + d.to_string() + " does not peg the graph");
    }
    return d;
}

std::uint64_t fibonacci(unsigned k) {
    if (k > 93) throw std::overflow_error("fibonacci: index too large");
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    for (unsigned i = 0; i < k; ++i) {
        const std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

Distribution fibonacci_distribution(std::size_t b, std::size_t h) {
    if (h > 60) throw std::invalid_argument("fibonacci_distribution: height too large");
    const std::uint64_t need = fibonacci(static_cast<unsigned>(h) + 3) - 2;
    if (b < need) {
        throw std::invalid_argument("fibonacci_distribution: branching " + std::to_string(b) + " below F_{h+3}-2 = " +
                                    std::to_string(need));
    }
    const auto count = ary_vertex_count(b, h);
    if (!count) throw std::overflow_error("fibonacci_distribution: tree too large to address");
    Distribution d(*count);
    d.insert(0);
    VertexId next_child = 0;  // children of the root are 1..b in BFS order
    auto place = [&](auto&& self, std::size_t k) -> void {
        if (k == 0) return;
        if (k == 1) {
            d.insert(1 + next_child++);
            return;
        }
        self(self, k - 1);
        self(self, k - 2);
        const VertexId x = 1 + next_child++;
        d.insert(x);
        d.insert(static_cast<VertexId>(b * x + 1));  // first child of x
    };
    place(place, h);
    return d;
}

VerifyReport verify_pegs(const Graph& g, const Distribution& d, const SearchBudget& budget) {
    const std::size_t n = g.vertex_count();
    if (d.universe() != n) throw std::invalid_argument("distribution does not match graph");
    VerifyReport out;
    out.targets.resize(n);
    std::vector<SearchStats> stats(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < count; ++t) {
        const auto v = static_cast<VertexId>(t);
        out.targets[v] = query_target(g, d, v, budget, &stats[v]);
    }
    for (const auto& s : stats) out.stats += s;
    bool unknown = false;
    out.verdict = CoverVerdict::pegs;
    for (const auto& t : out.targets) {
        if (t.status == Status::unreachable) {
            out.verdict = CoverVerdict::does_not_peg;
            return out;
        }
        unknown = unknown || t.status == Status::unknown;
    }
    if (unknown) out.verdict = CoverVerdict::unknown;
    return out;
}

ProbabilityEstimate peg_probability(const Graph& g, std::size_t k, std::uint64_t samples, std::uint64_t seed,
                                    const SearchBudget& budget, std::uint64_t exhaustive_cap) {
    const std::size_t n = g.vertex_count();
    if (k > n) throw std::invalid_argument("peg_probability: k exceeds vertex count");
    ProbabilityEstimate est;
    est.k = k;
    std::optional<std::uint64_t> total;
    try {
        total = binomial(n, k);
    } catch (const std::overflow_error&) {
    }

    std::vector<Distribution> picks;
    if (total && *total <= exhaustive_cap) {
        est.exact = true;
        std::vector<VertexId> combo(k);
        std::iota(combo.begin(), combo.end(), VertexId{0});
        do {
            picks.push_back(Distribution::of(n, combo));
        } while (next_combination(combo, n));
    } else {
        if (total) samples = std::min(samples, *total);
        std::mt19937_64 rng(seed);
        std::set<Distribution> seen;
        std::vector<VertexId> ids(n);
        while (picks.size() < samples) {
            std::iota(ids.begin(), ids.end(), VertexId{0});
            for (std::size_t i = 0; i < k; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, n - 1);
                std::swap(ids[i], ids[pick(rng)]);
            }
            Distribution d = Distribution::of(n, std::span<const VertexId>(ids.data(), k));
            if (seen.insert(d).second) picks.push_back(std::move(d));
        }
    }

    const CoverChecker checker(g);
    std::vector<CoverVerdict> verdict(picks.size());
    const auto count = static_cast<std::int64_t>(picks.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
        verdict[static_cast<std::size_t>(i)] = checker.check(picks[static_cast<std::size_t>(i)], budget);
    }
    est.trials = picks.size();
    est.successes = static_cast<std::uint64_t>(std::count(verdict.begin(), verdict.end(), CoverVerdict::pegs));
    est.unknown = static_cast<std::uint64_t>(std::count(verdict.begin(), verdict.end(), CoverVerdict::unknown));
    if (est.trials > 0) {
        est.estimate = static_cast<double>(est.successes) / static_cast<double>(est.trials);
        if (!est.exact) est.standard_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(est.trials));
    }
    return est;
}

std::vector<LeafRemovalRow> leaf_removal_scan(const Graph& g, const SearchBudget& budget) {
    if (!g.is_tree()) throw std::invalid_argument("leaf_removal_scan: graph is not a tree");
    if (g.vertex_count() < 3) throw std::invalid_argument("leaf_removal_scan: need at least 3 vertices");
    const auto before = optimal_pegging_number(g, budget).value;
    std::vector<LeafRemovalRow> rows;
    for (VertexId leaf : leaves(g)) {
        LeafRemovalRow row;
        row.leaf = leaf;
        row.p_before = before;
        row.p_after = optimal_pegging_number(remove_vertex(g, leaf), budget).value;
        row.increases = row.p_before && row.p_after && *row.p_after > *row.p_before;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace peg

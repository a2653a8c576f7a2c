#include "pegging/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pegging/weights.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace peg {

std::string to_string(Status s) {
    switch (s) {
        case Status::reachable: return "reachable";
        case Status::unreachable: return "unreachable";
        case Status::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(EvidenceKind e) {
    switch (e) {
        case EvidenceKind::witness: return "witness";
        case EvidenceKind::weight_certificate: return "weight-certificate";
        case EvidenceKind::exhausted_state_space: return "exhausted-state-space";
        case EvidenceKind::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

bool ReachOutcome::pegs_all() const {
    return std::all_of(targets.begin(), targets.end(), [](const TargetOutcome& t) { return t.status == Status::reachable; });
}

bool ReachOutcome::any_unknown() const {
    return std::any_of(targets.begin(), targets.end(), [](const TargetOutcome& t) { return t.status == Status::unknown; });
}

std::vector<VertexId> ReachOutcome::reachable() const {
    std::vector<VertexId> out;
    for (const auto& t : targets) {
        if (t.status == Status::reachable) out.push_back(t.vertex);
    }
    return out;
}

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    bool test(VertexId v) const { return ((w[v >> 6] >> (v & 63)) & 1U) != 0; }
    void set(VertexId v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(VertexId v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < W; ++i) {
            std::uint64_t word = w[i];
            while (word != 0) {
                f(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(word))));
                word &= word - 1;
            }
        }
    }

    friend bool operator==(const Bits&, const Bits&) = default;
};

struct BitsHash {
    template <std::size_t W>
    std::size_t operator()(const Bits<W>& b) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t x : b.w) {
            x ^= x >> 33;
            x *= 0xff51afd7ed558ccdULL;
            x ^= x >> 33;
            h = (h ^ x) * 0xc4ceb9fe1a85ec53ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

template <std::size_t W>
Bits<W> to_bits(const Distribution& d) {
    Bits<W> b;
    const auto words = d.words();
    for (std::size_t i = 0; i < words.size(); ++i) b.w[i] = words[i];
    return b;
}

template <class F>
decltype(auto) with_width(std::size_t n, F&& f) {
    if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
    if (n <= 128) return f(std::integral_constant<std::size_t, 2>{});
    if (n <= 256) return f(std::integral_constant<std::size_t, 4>{});
    if (n <= 512) return f(std::integral_constant<std::size_t, 8>{});
    if (n <= kMaxSearchVertices) return f(std::integral_constant<std::size_t, 16>{});
    throw std::invalid_argument("search supports at most " + std::to_string(kMaxSearchVertices) + " vertices");
}

using detail::JumpTable;

JumpTable all_jumps(const Graph& g) {
    JumpTable t;
    t.offsets.push_back(0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId u : g.neighbors(v)) {
            for (VertexId w : g.neighbors(v)) {
                if (u != w) t.jumps.push_back({u, w});
            }
        }
        t.offsets.push_back(t.jumps.size());
    }
    return t;
}

JumpTable toward_jumps(const Graph& g, std::span<const std::uint32_t> dist) {
    JumpTable t;
    t.offsets.push_back(0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId u : g.neighbors(v)) {
            for (VertexId w : g.neighbors(v)) {
                if (u != w && dist[w] < dist[u]) t.jumps.push_back({u, w});
            }
        }
        t.offsets.push_back(t.jumps.size());
    }
    return t;
}

void require_search_size(const Graph& g, const Distribution& d) {
    if (d.universe() != g.vertex_count()) throw std::invalid_argument("distribution does not match graph");
    if (g.vertex_count() > kMaxSearchVertices) {
        throw std::invalid_argument("search supports at most " + std::to_string(kMaxSearchVertices) + " vertices");
    }
}

// Breadth-first explorer over proper distributions. States are stored once;
// parents and incoming moves give witnesses.
template <std::size_t W>
class ProperExplorer {
public:
    ProperExplorer(const JumpTable& jumps, std::size_t max_states) : jumps_(jumps), max_states_(max_states) {}

    // Calls on_state(index) for the start state and each newly discovered
    // state; returning true stops the search. Returns whether the reachable
    // state space was fully explored.
    template <class OnState>
    bool run(const Bits<W>& start, OnState&& on_state) {
        if (max_states_ == 0) return false;
        add(start, kNone, {});
        if (on_state(0U)) return false;
        for (std::size_t head = 0; head < states_.size(); ++head) {
            const Bits<W> s = states_[head];
            ++expansions_;
            bool stop = false;
            bool truncated = false;
            s.for_each([&](VertexId v) {
                if (stop || truncated) return;
                for (const auto& j : jumps_.across(v)) {
                    if (!s.test(j.from) || s.test(j.to)) continue;
                    Bits<W> next = s;
                    next.reset(j.from);
                    next.reset(v);
                    next.set(j.to);
                    if (index_.contains(next)) continue;
                    if (states_.size() >= max_states_) {
                        truncated = true;
                        return;
                    }
                    const auto idx = add(next, static_cast<std::uint32_t>(head), {j.from, v, j.to, MoveKind::pegging});
                    if (on_state(idx)) {
                        stop = true;
                        return;
                    }
                }
            });
            if (stop || truncated) return false;
        }
        return true;
    }

    const Bits<W>& state(std::uint32_t i) const { return states_[i]; }
    std::size_t size() const { return states_.size(); }
    std::size_t expansions() const { return expansions_; }

    std::vector<Move> path_to(std::uint32_t i) const {
        std::vector<Move> out;
        while (parent_[i] != kNone) {
            out.push_back(via_[i]);
            i = parent_[i];
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    std::uint32_t add(const Bits<W>& s, std::uint32_t parent, Move via) {
        const auto idx = static_cast<std::uint32_t>(states_.size());
        states_.push_back(s);
        parent_.push_back(parent);
        via_.push_back(via);
        index_.emplace(s, idx);
        return idx;
    }

    const JumpTable& jumps_;
    std::size_t max_states_;
    std::size_t expansions_ = 0;
    std::vector<Bits<W>> states_;
    std::vector<std::uint32_t> parent_;
    std::vector<Move> via_;
    std::unordered_map<Bits<W>, std::uint32_t, BitsHash> index_;
};

// Peg counts per vertex; used for stacking and peggling semantics.
using Counts = std::u16string;

Counts to_counts(const Distribution& d) {
    Counts c(d.universe(), u'\0');
    for (VertexId v : d.vertices()) c[v] = 1;
    return c;
}

struct CountsExplorer {
    const Graph& g;
    const JumpTable& jumps;
    bool pebbling = false;
    std::size_t max_states = 0;

    std::vector<Counts> states;
    std::vector<std::uint32_t> parent;
    std::vector<Move> via;
    std::unordered_map<Counts, std::uint32_t> index;
    std::size_t expansions = 0;

    std::uint32_t add(Counts s, std::uint32_t p, Move m) {
        const auto idx = static_cast<std::uint32_t>(states.size());
        index.emplace(s, idx);
        states.push_back(std::move(s));
        parent.push_back(p);
        via.push_back(m);
        return idx;
    }

    template <class F>
    void successors(const Counts& s, F&& f) const {
        for (VertexId v = 0; v < s.size(); ++v) {
            if (s[v] == 0) continue;
            for (const auto& j : jumps.across(v)) {
                if (s[j.from] == 0) continue;
                Counts next = s;
                --next[j.from];
                --next[v];
                ++next[j.to];
                if (!f(std::move(next), Move{j.from, v, j.to, s[j.to] == 0 ? MoveKind::pegging : MoveKind::stacking})) return;
            }
            if (pebbling && s[v] >= 2) {
                for (VertexId w : g.neighbors(v)) {
                    Counts next = s;
                    next[v] = static_cast<char16_t>(next[v] - 2);
                    ++next[w];
                    if (!f(std::move(next), Move{v, v, w, MoveKind::pebbling})) return;
                }
            }
        }
    }

    template <class OnState>
    bool run(Counts start, OnState&& on_state) {
        if (max_states == 0) return false;
        add(std::move(start), kNone, {});
        if (on_state(0U)) return false;
        for (std::size_t head = 0; head < states.size(); ++head) {
            ++expansions;
            bool stop = false;
            bool truncated = false;
            const Counts s = states[head];
            successors(s, [&](Counts next, Move m) {
                if (index.contains(next)) return true;
                if (states.size() >= max_states) {
                    truncated = true;
                    return false;
                }
                const auto idx = add(std::move(next), static_cast<std::uint32_t>(head), m);
                if (on_state(idx)) {
                    stop = true;
                    return false;
                }
                return true;
            });
            if (stop || truncated) return false;
        }
        return true;
    }

    std::vector<Move> path_to(std::uint32_t i) const {
        std::vector<Move> out;
        while (parent[i] != kNone) {
            out.push_back(via[i]);
            i = parent[i];
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

void check_move_shape(const Graph& g, const Move& m) {
    const std::size_t n = g.vertex_count();
    if (m.from >= n || m.over >= n || m.to >= n) throw std::invalid_argument("move " + to_string(m) + " names a vertex outside the graph");
    if (!g.adjacent(m.over, m.to)) throw std::invalid_argument("move " + to_string(m) + ": landing vertex not adjacent to jumped vertex");
    if (m.kind == MoveKind::pebbling) {
        if (m.from != m.over) throw std::invalid_argument("pebbling move " + to_string(m) + " must start and jump on one vertex");
        return;
    }
    if (m.from == m.over) throw std::invalid_argument("move " + to_string(m) + ": jumping peg and jumped peg coincide");
    if (m.from == m.to) throw std::invalid_argument("move " + to_string(m) + ": lands where it started");
    if (!g.adjacent(m.from, m.over)) throw std::invalid_argument("move " + to_string(m) + ": jumping vertex not adjacent to jumped vertex");
}

void apply_counts(const Graph& g, MultiDistribution& d, const Move& m) {
    check_move_shape(g, m);
    switch (m.kind) {
        case MoveKind::pegging:
            if (d.count(m.to) != 0) throw std::invalid_argument("pegging move " + to_string(m) + " lands on an occupied vertex");
            [[fallthrough]];
        case MoveKind::stacking:
            if (d.count(m.from) == 0 || d.count(m.over) == 0) throw std::invalid_argument("move " + to_string(m) + " needs pegs on both jump vertices");
            d.remove(m.from);
            d.remove(m.over);
            d.add(m.to);
            break;
        case MoveKind::pebbling:
            if (d.count(m.from) < 2) throw std::invalid_argument("pebbling move " + to_string(m) + " needs two pegs");
            d.remove(m.from, 2);
            d.add(m.to);
            break;
    }
}

TargetOutcome reachable_outcome(VertexId t, std::vector<Move> witness) {
    TargetOutcome o;
    o.vertex = t;
    o.status = Status::reachable;
    o.evidence = EvidenceKind::witness;
    o.witness = std::move(witness);
    return o;
}

TargetOutcome plain_outcome(VertexId t, Status s, EvidenceKind e) {
    TargetOutcome o;
    o.vertex = t;
    o.status = s;
    o.evidence = e;
    return o;
}

void self_check(const Graph& g, const Distribution& d, const TargetOutcome& o) {
    if (o.status == Status::reachable && !witness_reaches(g, d, o.witness, o.vertex)) {
        throw std::logic_error("engine produced a witness that does not replay for vertex " + std::to_string(o.vertex));
    }
}

}  // namespace

std::vector<Move> legal_moves(const Graph& g, const MultiDistribution& d, Mode mode) {
    if (d.universe() != g.vertex_count()) throw std::invalid_argument("distribution does not match graph");
    std::vector<Move> out;
    for (const auto& [v, cv] : d.counts()) {
        for (VertexId u : g.neighbors(v)) {
            if (d.count(u) == 0) continue;
            for (VertexId w : g.neighbors(v)) {
                if (w == u) continue;
                const bool occupied = d.count(w) != 0;
                if (occupied && mode == Mode::proper) continue;
                out.push_back({u, v, w, occupied ? MoveKind::stacking : MoveKind::pegging});
            }
        }
        if (mode == Mode::peggling && cv >= 2) {
            for (VertexId w : g.neighbors(v)) out.push_back({v, v, w, MoveKind::pebbling});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Move> legal_moves(const Graph& g, const Distribution& d, Mode mode) {
    return legal_moves(g, MultiDistribution(d), mode);
}

Distribution apply_move(const Graph& g, const Distribution& d, const Move& m) {
    if (m.kind != MoveKind::pegging) {
        throw std::invalid_argument(to_string(m.kind) + " move " + to_string(m) + " needs a multi-distribution");
    }
    MultiDistribution md(d);
    apply_counts(g, md, m);
    return md.support();
}

MultiDistribution apply_move(const Graph& g, const MultiDistribution& d, const Move& m) {
    MultiDistribution next = d;
    apply_counts(g, next, m);
    return next;
}

bool witness_reaches(const Graph& g, const Distribution& d0, std::span<const Move> moves, VertexId t) {
    MultiDistribution d(d0);
    try {
        for (const Move& m : moves) apply_counts(g, d, m);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return d.count(t) > 0;
}

ReachOutcome reach_set(const Graph& g, const Distribution& d, Mode mode, const SearchBudget& budget) {
    require_search_size(g, d);
    const std::size_t n = g.vertex_count();
    const JumpTable jumps = all_jumps(g);
    ReachOutcome out;
    std::vector<std::uint32_t> first_cover(n, kNone);
    std::size_t covered = 0;
    auto note = [&](VertexId v, std::uint32_t idx) {
        if (first_cover[v] == kNone) {
            first_cover[v] = idx;
            ++covered;
        }
    };

    std::vector<std::vector<Move>> witnesses(n);
    bool complete = false;
    if (mode == Mode::proper) {
        with_width(n, [&](auto width) {
            constexpr std::size_t W = decltype(width)::value;
            ProperExplorer<W> explorer(jumps, budget.max_states);
            complete = explorer.run(to_bits<W>(d), [&](std::uint32_t idx) {
                explorer.state(idx).for_each([&](VertexId v) { note(v, idx); });
                return covered == n;
            });
            for (VertexId v = 0; v < n; ++v) {
                if (first_cover[v] != kNone) witnesses[v] = explorer.path_to(first_cover[v]);
            }
            out.stats.states = explorer.size();
            out.stats.expansions = explorer.expansions();
        });
    } else {
        CountsExplorer explorer{g, jumps, mode == Mode::peggling, budget.max_states, {}, {}, {}, {}, 0};
        complete = explorer.run(to_counts(d), [&](std::uint32_t idx) {
            const Counts& s = explorer.states[idx];
            for (VertexId v = 0; v < n; ++v) {
                if (s[v] != 0) note(v, idx);
            }
            return covered == n;
        });
        for (VertexId v = 0; v < n; ++v) {
            if (first_cover[v] != kNone) witnesses[v] = explorer.path_to(first_cover[v]);
        }
        out.stats.states = explorer.states.size();
        out.stats.expansions = explorer.expansions;
    }
    out.stats.complete = complete;

    // With a zero budget nothing is explored, but the initial pegs are
    // trivially reachable.
    for (VertexId v : d.vertices()) {
        if (first_cover[v] == kNone) {
            first_cover[v] = 0;
            witnesses[v].clear();
        }
    }

    out.targets.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        if (first_cover[v] != kNone) {
            out.targets[v] = reachable_outcome(v, std::move(witnesses[v]));
            self_check(g, d, out.targets[v]);
        } else if (complete) {
            out.targets[v] = plain_outcome(v, Status::unreachable, EvidenceKind::exhausted_state_space);
        } else {
            out.targets[v] = plain_outcome(v, Status::unknown, EvidenceKind::budget_exhausted);
        }
    }
    return out;
}

TargetOutcome reach_target_tree_directed(const Graph& g, const Distribution& d, VertexId t, const SearchBudget& budget,
                                         SearchStats* stats) {
    require_search_size(g, d);
    if (!g.is_tree()) throw std::invalid_argument("reach_target_tree_directed: graph is not a tree");
    if (t >= g.vertex_count()) throw std::out_of_range("target out of range");
    if (d.contains(t)) return reachable_outcome(t, {});
    const auto dist = distances_from(g, t);
    const JumpTable jumps = toward_jumps(g, dist);
    TargetOutcome out;
    with_width(g.vertex_count(), [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        ProperExplorer<W> explorer(jumps, budget.max_states);
        std::uint32_t hit = kNone;
        const bool complete = explorer.run(to_bits<W>(d), [&](std::uint32_t idx) {
            if (explorer.state(idx).test(t)) {
                hit = idx;
                return true;
            }
            return false;
        });
        if (hit != kNone) {
            out = reachable_outcome(t, explorer.path_to(hit));
        } else if (complete) {
            out = plain_outcome(t, Status::unreachable, EvidenceKind::exhausted_state_space);
        } else {
            out = plain_outcome(t, Status::unknown, EvidenceKind::budget_exhausted);
        }
        if (stats != nullptr) {
            stats->states += explorer.size();
            stats->expansions += explorer.expansions();
            stats->complete = complete;
        }
    });
    self_check(g, d, out);
    return out;
}

TargetOutcome witness_search(const Graph& g, const Distribution& d, VertexId t, const SearchBudget& budget,
                             SearchStats* stats) {
    require_search_size(g, d);
    if (t >= g.vertex_count()) throw std::out_of_range("target out of range");
    if (d.contains(t)) return reachable_outcome(t, {});
    const std::size_t n = g.vertex_count();
    const auto dist = distances_from(g, t);
    const JumpTable jumps = g.is_tree() ? toward_jumps(g, dist) : all_jumps(g);

    std::vector<OmegaInt> vertex_weight(n);
    for (VertexId v = 0; v < n; ++v) vertex_weight[v] = dist[v] == kUnreached ? OmegaInt{} : omega_pow_int(dist[v]);
    auto weight_of = [&](const Counts& s) {
        OmegaInt w;
        for (VertexId v = 0; v < n; ++v) {
            if (s[v] != 0) w += vertex_weight[v].scaled(s[v]);
        }
        return w;
    };
    const OmegaInt one{1, 0};

    CountsExplorer store{g, jumps, false, budget.max_states, {}, {}, {}, {}, 0};
    struct Node {
        OmegaInt weight;
        std::size_t pegs;
        std::uint32_t index;
    };
    // priority_queue pops the greatest element, so "less" means "explored later".
    // States are encoded as peg counts listed from the vertex nearest t
    // outwards; among equal weight and size, more pegs near t come first.
    std::vector<VertexId> by_distance(n);
    std::iota(by_distance.begin(), by_distance.end(), VertexId{0});
    std::stable_sort(by_distance.begin(), by_distance.end(), [&](VertexId x, VertexId y) { return dist[x] < dist[y]; });
    auto later = [&](const Node& a, const Node& b) {
        if (const auto c = a.weight <=> b.weight; c != 0) return c < 0;
        if (a.pegs != b.pegs) return a.pegs > b.pegs;
        const Counts& sa = store.states[a.index];
        const Counts& sb = store.states[b.index];
        for (VertexId v : by_distance) {
            if (sa[v] != sb[v]) return sa[v] < sb[v];
        }
        return false;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(later)> open(later);

    TargetOutcome out = plain_outcome(t, Status::unknown, EvidenceKind::budget_exhausted);
    auto finish = [&](SearchStats s) {
        if (stats != nullptr) *stats += s;
    };
    const Counts start = to_counts(d);
    const OmegaInt start_weight = weight_of(start);
    if (start_weight < one || budget.max_states == 0) {
        finish({});
        return out;
    }
    store.add(start, kNone, {});
    open.push({start_weight, d.size(), 0});
    std::size_t expansions = 0;
    bool found = false;
    while (!open.empty() && expansions < budget.max_expansions && !found) {
        const Node node = open.top();
        open.pop();
        ++expansions;
        const Counts current = store.states[node.index];
        store.successors(current, [&](Counts next, Move m) {
            if (store.index.contains(next)) return true;
            const OmegaInt w = node.weight - vertex_weight[m.from] - vertex_weight[m.over] + vertex_weight[m.to];
            if (w < one) return true;  // certified dead end
            if (store.states.size() >= budget.max_states) return false;
            const bool hit = next[t] != 0;
            const auto idx = store.add(std::move(next), node.index, m);
            if (hit) {
                out = reachable_outcome(t, store.path_to(idx));
                found = true;
                return false;
            }
            open.push({w, node.pegs - 1, idx});
            return true;
        });
    }
    finish({store.states.size(), expansions, open.empty() && !found});
    self_check(g, d, out);
    return out;
}

TargetOutcome query_target(const Graph& g, const Distribution& d, VertexId t, const SearchBudget& budget, SearchStats* stats) {
    if (d.universe() != g.vertex_count()) throw std::invalid_argument("distribution does not match graph");
    if (t >= g.vertex_count()) throw std::out_of_range("target out of range");
    if (d.contains(t)) return reachable_outcome(t, {});
    if (auto cert = weight_unreachability_certificate(g, d, t)) {
        TargetOutcome o = plain_outcome(t, Status::unreachable, EvidenceKind::weight_certificate);
        o.weight = std::move(cert->weight);
        return o;
    }
    TargetOutcome found = witness_search(g, d, t, budget, stats);
    if (found.status == Status::reachable) return found;
    if (g.is_tree()) return reach_target_tree_directed(g, d, t, budget, stats);
    ReachOutcome all = reach_set(g, d, Mode::proper, budget);
    if (stats != nullptr) *stats += all.stats;
    return std::move(all.targets[t]);
}

CoverChecker::CoverChecker(const Graph& g) : g_(&g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxSearchVertices) {
        throw std::invalid_argument("search supports at most " + std::to_string(kMaxSearchVertices) + " vertices");
    }
    power_.resize(n * n);
    for (VertexId t = 0; t < n; ++t) {
        const auto dist = distances_from(g, t);
        for (VertexId v = 0; v < n; ++v) power_[t * n + v] = dist[v] == kUnreached ? OmegaInt{} : omega_pow_int(dist[v]);
    }
    jumps_ = all_jumps(g);
}

OmegaInt CoverChecker::weight(VertexId t, const Distribution& d) const {
    const std::size_t n = g_->vertex_count();
    OmegaInt w;
    for (VertexId v : d.vertices()) w += power_[t * n + v];
    return w;
}

std::optional<OmegaInt> CoverChecker::min_target_weight(const Distribution& d) const {
    std::optional<OmegaInt> best;
    for (VertexId t = 0; t < g_->vertex_count(); ++t) {
        if (d.contains(t)) continue;
        const OmegaInt w = weight(t, d);
        if (!best || w < *best) best = w;
    }
    return best;
}

CoverVerdict CoverChecker::check(const Distribution& d, const SearchBudget& budget, SearchStats* stats) const {
    require_search_size(*g_, d);
    const std::size_t n = g_->vertex_count();
    if (auto w = min_target_weight(d); w && *w < OmegaInt{1, 0}) return CoverVerdict::does_not_peg;
    CoverVerdict verdict = CoverVerdict::unknown;
    with_width(n, [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        ProperExplorer<W> explorer(jumps_, budget.max_states);
        Bits<W> covered;
        std::size_t count = 0;
        const bool complete = explorer.run(to_bits<W>(d), [&](std::uint32_t idx) {
            explorer.state(idx).for_each([&](VertexId v) {
                if (!covered.test(v)) {
                    covered.set(v);
                    ++count;
                }
            });
            return count == n;
        });
        if (count == n) {
            verdict = CoverVerdict::pegs;
        } else if (complete) {
            verdict = CoverVerdict::does_not_peg;
        }
        if (stats != nullptr) {
            stats->states += explorer.size();
            stats->expansions += explorer.expansions();
        }
    });
    return verdict;
}

CoverVerdict covers_graph(const Graph& g, const Distribution& d, const SearchBudget& budget, SearchStats* stats) {
    return CoverChecker(g).check(d, budget, stats);
}

AncestorReplay replay_with_ancestors(const Graph& g, const Distribution& d0, std::span<const Move> moves) {
    if (d0.universe() != g.vertex_count()) throw std::invalid_argument("distribution does not match graph");
    const std::size_t n = g.vertex_count();
    // Each vertex holds a stack of pegs; each peg carries its ancestor set.
    std::vector<std::vector<Distribution>> pegs(n);
    MultiDistribution state(d0);
    for (VertexId v : d0.vertices()) pegs[v].push_back(Distribution::of(n, std::array{v}));
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const Move& m = moves[i];
        try {
            apply_counts(g, state, m);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("illegal move at index " + std::to_string(i) + ": " + e.what());
        }
        Distribution merged = std::move(pegs[m.from].back());
        pegs[m.from].pop_back();
        const Distribution& other = pegs[m.over].back();
        for (VertexId a : other.vertices()) merged.insert(a);
        pegs[m.over].pop_back();
        pegs[m.to].push_back(std::move(merged));
    }
    AncestorReplay out{state, {}};
    for (VertexId v = 0; v < n; ++v) {
        for (auto& anc : pegs[v]) out.pegs.push_back({v, std::move(anc)});
    }
    return out;
}

}  // namespace peg

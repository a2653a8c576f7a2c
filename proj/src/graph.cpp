#include "pegging/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Upper limit on generated family sizes; keeps accidental huge inputs from
// exhausting memory.
constexpr std::size_t kMaxFamilyVertices = std::size_t{1} << 24;

// Relabels a tree given in insertion order so ids follow BFS from `root`,
// visiting neighbors in insertion order.
Graph relabel_bfs(std::size_t n, const std::vector<Edge>& edges, VertexId root, std::string tag) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<VertexId> order(n, kUnreached);
    std::deque<VertexId> queue{root};
    VertexId next = 0;
    order[root] = next++;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : adj[v]) {
            if (order[u] == kUnreached) {
                order[u] = next++;
                queue.push_back(u);
            }
        }
    }
    std::vector<Edge> renamed;
    renamed.reserve(edges.size());
    for (const auto& [u, v] : edges) renamed.emplace_back(order[u], order[v]);
    return Graph::from_edges(n, renamed, std::move(tag));
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

std::string to_dsl(const FamilySpec& spec) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const PathSpec& s) { out << "path:" << s.n; },
                   [&](const StarSpec& s) { out << "star:" << s.n; },
                   [&](const ArySpec& s) { out << "ary:" << s.branching << ',' << s.height; },
                   [&](const CaterpillarSpec& s) {
                       out << "cat:";
                       for (std::size_t i = 0; i < s.leaves.size(); ++i) out << (i ? "," : "") << s.leaves[i];
                   },
                   [&](const LobsterSpec& s) {
                       out << "lobster:";
                       for (std::size_t i = 0; i < s.legs.size(); ++i) {
                           out << (i ? "," : "") << '(';
                           for (std::size_t j = 0; j < s.legs[i].size(); ++j) out << (j ? "," : "") << s.legs[i][j];
                           out << ')';
                       }
                   },
               },
               spec);
    return out.str();
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::optional<std::string> tag) {
    if (n > std::numeric_limits<VertexId>::max() / 2) {
        throw std::invalid_argument("graph too large");
    }
    std::vector<std::size_t> degree(n, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        ++degree[u];
        ++degree[v];
    }
    Graph g;
    g.tag_ = std::move(tag);
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[fill[u]++] = v;
        g.neighbors_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        }
    }
    return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return false;
    const auto dist = distances_from(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreached; });
}

RootedView rooted_at(const Graph& g, VertexId root) {
    RootedView view;
    view.root = root;
    view.level = distances_from(g, root);
    view.parent.assign(g.vertex_count(), std::nullopt);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == root) continue;
        for (VertexId u : g.neighbors(v)) {
            if (view.level[u] + 1 == view.level[v]) {
                view.parent[v] = u;
                break;
            }
        }
    }
    return view;
}

std::optional<std::size_t> ary_vertex_count(std::size_t b, std::size_t h) {
    std::size_t total = 1;
    std::size_t layer = 1;
    for (std::size_t l = 1; l <= h; ++l) {
        if (b != 0 && layer > std::numeric_limits<std::size_t>::max() / b) return std::nullopt;
        layer *= b;
        if (total > std::numeric_limits<std::size_t>::max() - layer) return std::nullopt;
        total += layer;
    }
    return total;
}

Family build_family(const FamilySpec& spec) {
    const std::string tag = to_dsl(spec);
    return std::visit(
        overloaded{
            [&](const PathSpec& s) -> Family {
                require(s.n >= 1, "path: need n >= 1");
                require(s.n <= kMaxFamilyVertices, "path: too many vertices");
                std::vector<Edge> edges;
                for (std::size_t i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
                return {Graph::from_edges(s.n, edges, tag), std::nullopt};
            },
            [&](const StarSpec& s) -> Family {
                require(s.n >= 2, "star: need n >= 2");
                require(s.n <= kMaxFamilyVertices, "star: too many vertices");
                std::vector<Edge> edges;
                for (std::size_t i = 1; i < s.n; ++i) edges.emplace_back(0, i);
                return {Graph::from_edges(s.n, edges, tag), std::nullopt};
            },
            [&](const ArySpec& s) -> Family {
                require(s.branching >= 1, "ary: need branching b >= 1");
                const auto count = ary_vertex_count(s.branching, s.height);
                require(count && *count <= kMaxFamilyVertices, "ary: tree too large");
                const std::size_t n = *count;
                std::vector<Edge> edges;
                edges.reserve(n - 1);
                // BFS numbering: children of v are b*v + 1 .. b*v + b.
                for (std::size_t v = 1; v < n; ++v) edges.emplace_back((v - 1) / s.branching, v);
                Family f{Graph::from_edges(n, edges, tag), std::nullopt};
                f.rooted = rooted_at(f.graph, 0);
                return f;
            },
            [&](const CaterpillarSpec& s) -> Family {
                require(!s.leaves.empty(), "cat: spine length must be >= 1");
                std::size_t n = s.leaves.size();
                for (std::size_t c : s.leaves) n += c;
                require(n <= kMaxFamilyVertices, "cat: too many vertices");
                std::vector<Edge> edges;
                VertexId next = static_cast<VertexId>(s.leaves.size());
                for (std::size_t i = 0; i < s.leaves.size(); ++i) {
                    for (std::size_t j = 0; j < s.leaves[i]; ++j) edges.emplace_back(i, next++);
                    if (i + 1 < s.leaves.size()) edges.emplace_back(i, i + 1);
                }
                return {relabel_bfs(n, edges, 0, tag), std::nullopt};
            },
            [&](const LobsterSpec& s) -> Family {
                require(!s.legs.empty(), "lobster: spine length must be >= 1");
                std::size_t n = s.legs.size();
                for (const auto& legs : s.legs) {
                    for (std::size_t k : legs) n += 1 + k;
                }
                require(n <= kMaxFamilyVertices, "lobster: too many vertices");
                std::vector<Edge> edges;
                VertexId next = static_cast<VertexId>(s.legs.size());
                for (std::size_t i = 0; i < s.legs.size(); ++i) {
                    for (std::size_t k : s.legs[i]) {
                        const VertexId middle = next++;
                        edges.emplace_back(i, middle);
                        for (std::size_t j = 0; j < k; ++j) edges.emplace_back(middle, next++);
                    }
                    if (i + 1 < s.legs.size()) edges.emplace_back(i, i + 1);
                }
                return {relabel_bfs(n, edges, 0, tag), std::nullopt};
            },
        },
        spec);
}

std::vector<std::uint32_t> distances_from(const Graph& g, VertexId t) {
    if (t >= g.vertex_count()) throw std::out_of_range("distances_from: vertex out of range");
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    queue.push_back(t);
    dist[t] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (VertexId u : g.neighbors(v)) {
            if (dist[u] == kUnreached) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

namespace {

std::vector<VertexId> bfs_path(const Graph& g, VertexId from, VertexId to) {
    const auto dist = distances_from(g, to);
    std::vector<VertexId> path{from};
    VertexId v = from;
    while (v != to) {
        for (VertexId u : g.neighbors(v)) {
            if (dist[u] + 1 == dist[v]) {
                v = u;
                break;
            }
        }
        path.push_back(v);
    }
    return path;
}

}  // namespace

LongestPath diameter_and_longest_path(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("diameter: graph is not connected");
    const std::size_t n = g.vertex_count();
    auto farthest = [&](VertexId s) {
        const auto dist = distances_from(g, s);
        VertexId best = s;
        for (VertexId v = 0; v < n; ++v) {
            if (dist[v] > dist[best]) best = v;
        }
        return std::pair{best, dist[best]};
    };
    if (g.is_tree()) {
        const auto [a, da] = farthest(0);
        const auto [b, db] = farthest(a);
        return {db, bfs_path(g, a, b)};
    }
    VertexId best_a = 0;
    VertexId best_b = 0;
    std::uint32_t best = 0;
    for (VertexId s = 0; s < n; ++s) {
        const auto [b, db] = farthest(s);
        if (db > best) {
            best = db;
            best_a = s;
            best_b = b;
        }
    }
    return {best, bfs_path(g, best_a, best_b)};
}

std::vector<VertexId> leaves(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("leaves: empty graph");
    if (g.vertex_count() == 1) return {0};
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) out.push_back(v);
    }
    return out;
}

Graph remove_vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw std::out_of_range("remove_vertex: vertex out of range");
    auto rename = [v](VertexId u) { return u > v ? u - 1 : u; };
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a != v && b != v) edges.emplace_back(rename(a), rename(b));
    }
    return Graph::from_edges(g.vertex_count() - 1, edges);
}

namespace {

// Vertices that are not leaves induce a path (possibly empty or a single
// vertex) in a tree.
bool inner_vertices_form_path(const Graph& g, const std::vector<bool>& keep) {
    std::size_t count = 0;
    std::size_t edges = 0;
    VertexId start = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!keep[v]) continue;
        ++count;
        start = v;
        std::size_t inner_degree = 0;
        for (VertexId u : g.neighbors(v)) {
            if (keep[u]) ++inner_degree;
        }
        if (inner_degree > 2) return false;
        edges += inner_degree;
    }
    if (count <= 1) return true;
    edges /= 2;
    if (edges + 1 != count) return false;
    // connectivity of the kept subgraph
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{start};
    seen[start] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId u : g.neighbors(v)) {
            if (keep[u] && !seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    return reached == count;
}

std::vector<bool> non_leaf_mask(const Graph& g, const std::vector<bool>& alive) {
    std::vector<bool> keep(g.vertex_count(), false);
    std::size_t alive_count = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) alive_count += alive[v];
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!alive[v]) continue;
        std::size_t deg = 0;
        for (VertexId u : g.neighbors(v)) deg += alive[u];
        keep[v] = alive_count <= 1 || deg > 1;
    }
    return keep;
}

}  // namespace

bool is_caterpillar(const Graph& g) {
    if (!g.is_tree()) return false;
    const std::vector<bool> all(g.vertex_count(), true);
    return inner_vertices_form_path(g, non_leaf_mask(g, all));
}

bool is_lobster(const Graph& g) {
    if (!g.is_tree()) return false;
    const std::vector<bool> all(g.vertex_count(), true);
    const auto once = non_leaf_mask(g, all);
    return inner_vertices_form_path(g, non_leaf_mask(g, once));
}

}  // namespace peg

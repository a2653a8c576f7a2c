#include "pegging/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace peg {

namespace {

std::string ahu(const Graph& g, VertexId v, VertexId parent) {
    std::vector<std::string> kids;
    for (VertexId w : g.neighbors(v)) {
        if (w != parent) kids.push_back(ahu(g, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

std::vector<VertexId> tree_centers(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexId> next;
        for (VertexId v : layer) {
            for (VertexId w : g.neighbors(v)) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string canonical_tree_form(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("canonical_tree_form: not a tree");
    std::string best;
    for (VertexId c : tree_centers(tree)) {
        std::string form = ahu(tree, c, static_cast<VertexId>(tree.vertex_count()));
        if (best.empty() || form < best) best = std::move(form);
    }
    return best;
}

Graph tree_from_prufer(std::span<const VertexId> seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (VertexId v : seq) {
        if (v >= n) throw std::invalid_argument("tree_from_prufer: label out of range");
        ++degree[v];
    }
    std::set<VertexId> leaves_left;
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves_left.insert(v);
    }
    std::vector<Edge> edges;
    for (VertexId v : seq) {
        const VertexId leaf = *leaves_left.begin();
        leaves_left.erase(leaves_left.begin());
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves_left.insert(v);
    }
    const VertexId a = *leaves_left.begin();
    const VertexId b = *std::next(leaves_left.begin());
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

std::vector<Graph> nonisomorphic_trees(std::size_t n) {
    if (n == 0 || n > 9) throw std::invalid_argument("nonisomorphic_trees: need 1 <= n <= 9");
    if (n == 1) return {Graph::from_edges(1, {})};
    if (n == 2) {
        const Edge e{0, 1};
        return {Graph::from_edges(2, std::span<const Edge>(&e, 1))};
    }
    std::map<std::string, Graph> seen;
    std::vector<VertexId> seq(n - 2, 0);
    for (;;) {
        Graph t = tree_from_prufer(seq);
        seen.try_emplace(canonical_tree_form(t), std::move(t));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    std::vector<Graph> out;
    for (auto& [form, g] : seen) out.push_back(std::move(g));
    return out;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
    if (n <= 2) return nonisomorphic_trees(n).front();
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::vector<VertexId> seq(n - 2);
    for (auto& v : seq) v = pick(rng);
    return tree_from_prufer(seq);
}

CaterpillarSpec random_caterpillar(std::size_t max_n, std::mt19937_64& rng) {
    if (max_n < 3) throw std::invalid_argument("random_caterpillar: need max_n >= 3");
    std::uniform_int_distribution<std::size_t> spine_len(1, std::min<std::size_t>(max_n - 2, 7));
    for (;;) {
        CaterpillarSpec spec;
        spec.leaves.resize(spine_len(rng));
        std::size_t budget = max_n - spec.leaves.size();
        std::uniform_int_distribution<std::size_t> extra(0, 3);
        for (auto& l : spec.leaves) {
            l = std::min(extra(rng), budget);
            budget -= l;
        }
        const Graph g = build_family(spec).graph;
        if (g.vertex_count() >= 3 && diameter_and_longest_path(g).diameter >= 2) return spec;
    }
}

std::vector<NamedGraph> validation_graphs() {
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, std::size_t n, const std::vector<Edge>& edges) {
        Graph g = Graph::from_edges(n, edges, name);
        out.push_back({std::move(name), std::move(g)});
    };
    for (std::size_t n : {3, 4, 5, 6}) {
        std::vector<Edge> e;
        for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
        add("cycle" + std::to_string(n), n, e);
    }
    for (std::size_t n : {4, 5}) {
        std::vector<Edge> e;
        for (VertexId i = 0; i < n; ++i) {
            for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
        }
        add("complete" + std::to_string(n), n, e);
    }
    {
        std::vector<Edge> e;
        for (VertexId r = 0; r < 3; ++r) {
            for (VertexId c = 0; c < 3; ++c) {
                if (c + 1 < 3) e.emplace_back(3 * r + c, 3 * r + c + 1);
                if (r + 1 < 3) e.emplace_back(3 * r + c, 3 * (r + 1) + c);
            }
        }
        add("grid3x3", 9, e);
    }
    {
        std::vector<Edge> e;
        for (VertexId i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(i, i + 5);
            e.emplace_back(i + 5, (i + 2) % 5 + 5);
        }
        add("petersen", 10, e);
    }
    return out;
}

std::vector<NamedGraph> corpus(std::size_t max_n) {
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(7, max_n); ++n) {
        const auto trees = nonisomorphic_trees(n);
        for (std::size_t i = 0; i < trees.size(); ++i) out.push_back({"tree" + std::to_string(n) + "#" + std::to_string(i), trees[i]});
    }
    auto add_family = [&](const FamilySpec& spec) {
        Family f = build_family(spec);
        if (f.graph.vertex_count() <= max_n) out.push_back({to_dsl(spec), std::move(f.graph)});
    };
    for (std::size_t n = 8; n <= max_n; ++n) {
        add_family(PathSpec{n});
        add_family(StarSpec{n});
    }
    add_family(CaterpillarSpec{{1, 0, 2, 1}});
    add_family(CaterpillarSpec{{2, 1, 0, 1, 2}});
    add_family(LobsterSpec{{{1, 1, 1, 1}}});
    add_family(LobsterSpec{{{1}, {1}}});
    add_family(LobsterSpec{{{1, 0}, {}, {2}}});
    add_family(ArySpec{2, 2});
    add_family(ArySpec{3, 2});
    for (auto& g : validation_graphs()) {
        if (g.graph.vertex_count() <= max_n) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace peg

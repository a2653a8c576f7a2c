#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pegging/cache.hpp"
#include "pegging/dsl.hpp"
#include "pegging/json_io.hpp"
#include "pegging/solvers.hpp"
#include "pegging/suites.hpp"
#include "pegging/version.hpp"
#include "pegging/weights.hpp"

using namespace peg;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Globals {
    std::size_t budget_states = SearchBudget{}.max_states;
    std::size_t budget_expansions = SearchBudget{}.max_expansions;
    std::string cache;
    bool json = false;
    bool timing = false;
    std::uint64_t seed = 1;

    SearchBudget budget() const { return {budget_states, budget_expansions}; }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json header(const Globals& g, const std::string& command) {
    return Json{{"tool_version", kToolVersion},
                {"command", command},
                {"seed", g.seed},
                {"budget", {{"max_states", g.budget_states}, {"max_expansions", g.budget_expansions}}}};
}

void emit(const Globals& g, const std::string& command, const Json& result, const std::string& text) {
    if (g.json) {
        std::cout << Json{{"header", header(g, command)}, {"result", result}}.dump(2) << '\n';
        return;
    }
    std::cout << "# pegtool " << kToolVersion << " " << command << " seed=" << g.seed << " max_states=" << g.budget_states
              << " max_expansions=" << g.budget_expansions << '\n'
              << text;
}

std::vector<VertexId> parse_pegs(const std::string& text, std::size_t n) {
    std::vector<VertexId> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("--pegs: '" + tok + "' is not a vertex id");
        }
        if (used != tok.size()) throw UsageError("--pegs: '" + tok + "' is not a vertex id");
        if (v >= n) throw UsageError("--pegs: vertex " + tok + " out of range (n=" + std::to_string(n) + ")");
        out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

std::optional<ResultCache> open_cache(const Globals& g) {
    std::string path = g.cache;
    if (path.empty()) {
        if (const char* env = std::getenv("PEGTOOL_CACHE")) path = env;
    }
    if (path.empty()) return std::nullopt;
    return ResultCache(path);
}

// Returns the cached result or computes and stores a fresh one.
Json cached(const Globals& g, const std::string& canonical, const std::string& task, const Json& params,
            const std::function<Json()>& compute) {
    const auto cache = open_cache(g);
    const std::string key = graph_key(canonical);
    if (cache) {
        if (auto hit = cache->get(key, task, params); hit && !hit->stale) {
            std::cerr << "cache hit: " << task << " " << key << '\n';
            return hit->record.result;
        }
    }
    Json result = compute();
    if (cache) cache->put({key, task, params, result, utc_timestamp(), kToolVersion});
    return result;
}

Json budget_params(const Globals& g) {
    return Json{{"max_states", g.budget_states}, {"max_expansions", g.budget_expansions}, {"timing", g.timing}};
}

std::string dist_text(const Json& j) {
    if (j.is_null()) return "-";
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + std::to_string(j[i].get<std::size_t>());
    return out + "}";
}

int cmd_gen(const Globals& g, const std::string& spec) {
    const GraphInput in = load_graph_spec(spec);
    const Graph& gr = in.graph;
    Json result{{"spec", in.canonical},
                {"graph_key", graph_key(in.canonical)},
                {"vertex_count", gr.vertex_count()},
                {"edge_count", gr.edge_count()},
                {"connected", gr.is_connected()},
                {"tree", gr.is_tree()}};
    std::ostringstream text;
    text << "spec " << in.canonical << "\nvertices " << gr.vertex_count() << "\nedges " << gr.edge_count() << "\ntree "
         << (gr.is_tree() ? "yes" : "no") << '\n';
    if (gr.is_connected()) {
        const LongestPath lp = diameter_and_longest_path(gr);
        result["diameter"] = lp.diameter;
        result["longest_path"] = lp.path;
        text << "diameter " << lp.diameter << '\n';
    }
    const auto lv = leaves(gr);
    result["leaves"] = lv;
    result["edges"] = gr.edges();
    text << "leaves " << lv.size() << '\n';
    for (const auto& [u, v] : gr.edges()) text << u << ' ' << v << '\n';
    emit(g, "gen", result, text.str());
    return kOk;
}

int cmd_reach(const Globals& g, const std::string& spec, const std::string& pegs, const std::string& mode_name,
              std::optional<VertexId> target) {
    const GraphInput in = load_graph_spec(spec);
    const std::size_t n = in.graph.vertex_count();
    const Distribution d = Distribution::of(n, parse_pegs(pegs, n));
    Mode mode;
    try {
        mode = mode_from_string(mode_name);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    std::ostringstream text;
    if (target) {
        if (*target >= n) throw UsageError("--target out of range");
        if (mode != Mode::proper) throw UsageError("--target runs the proper-mode pipeline; drop --mode");
        SearchStats stats;
        const TargetOutcome o = query_target(in.graph, d, *target, g.budget(), &stats);
        Json result = to_json(o);
        result["weight_report"] = to_json(make_weight_report({*target}, distribution_weight(in.graph, *target, d)));
        text << "target " << o.vertex << ": " << to_string(o.status) << " (" << to_string(o.evidence) << ")\n";
        for (const Move& m : o.witness) text << "  " << to_string(m) << '\n';
        emit(g, "reach", result, text.str());
        return o.status == Status::unknown ? kBudget : kOk;
    }
    const ReachOutcome r = reach_set(in.graph, d, mode, g.budget());
    for (const auto& t : r.targets) text << t.vertex << ": " << to_string(t.status) << " (" << to_string(t.evidence) << ")\n";
    text << "states " << r.stats.states << '\n';
    emit(g, "reach", to_json(r), text.str());
    return r.any_unknown() ? kBudget : kOk;
}

int cmd_solve(const Globals& g, const std::string& spec, const std::string& quantity, bool serial) {
    if (quantity != "p" && quantity != "P") throw UsageError("--quantity must be p or P");
    const GraphInput in = load_graph_spec(spec);
    Json params = budget_params(g);
    params["quantity"] = quantity;
    const Json result = cached(g, in.canonical, "solve", params, [&] {
        const Execution exec = serial ? Execution::serial : Execution::parallel;
        SolveReport r = quantity == "p" ? optimal_pegging_number(in.graph, g.budget(), exec) : pegging_number(in.graph, g.budget(), exec);
        if (!g.timing) r.millis = 0;
        return to_json(r);
    });
    std::ostringstream text;
    text << quantity << "(" << result["family"].get<std::string>() << ") = "
         << (result["value"].is_string() ? result["value"].get<std::string>() : std::to_string(result["value"].get<std::size_t>()))
         << "\nlower bound " << result["lower_bound"] << " (" << result["lower_bound_kind"].get<std::string>() << ")\nwitness "
         << dist_text(result["witness"]) << "\ncounterexample " << dist_text(result["counterexample"]) << "\nstates "
         << result["states"] << '\n';
    emit(g, "solve", result, text.str());
    return result["value"].is_string() ? kBudget : kOk;
}

int cmd_construct(const Globals& g, const std::string& spec, const std::string& kind, bool verify) {
    std::ostringstream text;
    Json result;
    if (kind == "fib" || kind == "adversarial") {
        const FamilySpec fs = parse_family_spec(spec);
        const auto* ary = std::get_if<ArySpec>(&fs);
        if (ary == nullptr) throw UsageError("--kind " + kind + " needs an ary:<b>,<h> spec");
        if (kind == "adversarial") {
            if (ary->branching != 2) throw UsageError("--kind adversarial needs a binary tree (ary:2,<h>)");
            const auto c = binary_adversarial_distribution(static_cast<unsigned>(ary->height));
            result = to_json(c);
            text << "target " << c.target << "\nbase weight " << c.base_weight.to_string() << " ~ " << c.base_weight.to_double()
                 << "\nrefined weight " << c.refined_weight.to_string() << " ~ " << c.refined_weight.to_double() << "\nempty vertices "
                 << c.empty_vertices << " (claimed budget " << AdversarialCertificate::kClaimedBudget << ")\n";
            emit(g, "construct", result, text.str());
            return kOk;
        }
        const Distribution d = fibonacci_distribution(ary->branching, ary->height);
        result = Json{{"spec", to_dsl(fs)}, {"size", d.size()}, {"pegs", to_json(d)}};
        text << "size " << d.size() << "\npegs " << d.to_string() << '\n';
        if (verify) {
            const Graph gr = build_family(fs).graph;
            const VerifyReport v = verify_pegs(gr, d, g.budget());
            result["verify"] = to_json(v);
            const char* verdict = v.verdict == CoverVerdict::pegs ? "pegs" : (v.verdict == CoverVerdict::does_not_peg ? "does-not-peg" : "unknown");
            text << "verdict " << verdict << '\n';
            emit(g, "construct", result, text.str());
            return v.verdict == CoverVerdict::pegs ? kOk : (v.verdict == CoverVerdict::unknown ? kBudget : kCheckFailed);
        }
        emit(g, "construct", result, text.str());
        return kOk;
    }
    const GraphInput in = load_graph_spec(spec);
    Distribution d;
    if (kind == "caterpillar") {
        d = caterpillar_distribution(in.graph, g.budget());
    } else if (kind == "lobster") {
        d = lobster_distribution(in.graph, g.budget());
    } else {
        throw UsageError("--kind must be fib, caterpillar, lobster or adversarial");
    }
    result = Json{{"spec", in.canonical}, {"size", d.size()}, {"pegs", to_json(d)}, {"verified", true}};
    text << "size " << d.size() << "\npegs " << d.to_string() << "\nverified pegs\n";
    emit(g, "construct", result, text.str());
    return kOk;
}

int cmd_prob(const Globals& g, const std::string& spec, std::size_t k, std::uint64_t samples) {
    const GraphInput in = load_graph_spec(spec);
    Json params = budget_params(g);
    params["k"] = k;
    params["samples"] = samples;
    params["seed"] = g.seed;
    const Json result = cached(g, in.canonical, "prob", params,
                               [&] { return to_json(peg_probability(in.graph, k, samples, g.seed, g.budget())); });
    std::ostringstream text;
    text << "k " << k << "\nestimate " << result["estimate"].get<double>() << " +- " << result["stderr"].get<double>() << "\npegging "
         << result["successes"] << " of " << result["trials"] << (result["exact"].get<bool>() ? " (exhaustive)" : " (sampled)")
         << "\nunknown " << result["unknown"] << '\n';
    emit(g, "prob", result, text.str());
    return result["unknown"].get<std::uint64_t>() > 0 ? kBudget : kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::optional<std::string>& check, const std::string& out_path) {
    SuiteOptions options{g.budget(), g.seed, g.timing};
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& info : suite_catalog()) names.push_back(info.name);
    } else {
        names.push_back(suite);
    }
    std::vector<SuiteReport> reports;
    for (const auto& name : names) {
        try {
            reports.push_back(run_suite(name, options, check));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::app);
        if (!file) throw std::runtime_error("cannot write " + out_path);
    }
    bool ok = true;
    Json result = Json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
        if (file) write_jsonl(r, file);
        std::ostringstream lines;
        write_jsonl(r, lines);
        std::string line;
        std::istringstream in(lines.str());
        while (std::getline(in, line)) result.push_back(Json::parse(line));
        for (const auto& c : r.checks) {
            text << (c.passed ? "PASS " : "FAIL ") << c.criterion << " " << c.suite << " | " << c.name << " | expected " << c.expected
                 << " | observed " << c.observed << '\n';
        }
        ok = ok && r.passed();
    }
    emit(g, "verify " + suite, result, text.str());
    return ok ? kOk : kCheckFailed;
}

int cmd_scan_leaf(const Globals& g, const std::string& spec) {
    const GraphInput in = load_graph_spec(spec);
    const Json result = cached(g, in.canonical, "scan-leaf", budget_params(g), [&] {
        Json rows = Json::array();
        for (const auto& row : leaf_removal_scan(in.graph, g.budget())) {
            rows.push_back(Json{{"leaf", row.leaf},
                                {"p_before", row.p_before ? Json(*row.p_before) : Json("unknown")},
                                {"p_after", row.p_after ? Json(*row.p_after) : Json("unknown")},
                                {"increases", row.increases}});
        }
        return rows;
    });
    std::ostringstream text;
    bool unknown = false;
    for (const auto& row : result) {
        text << "leaf " << row["leaf"] << ": p " << row["p_before"].dump() << " -> " << row["p_after"].dump()
             << (row["increases"].get<bool>() ? "  INCREASES" : "") << '\n';
        unknown = unknown || row["p_before"].is_string() || row["p_after"].is_string();
    }
    emit(g, "scan-leaf", result, text.str());
    return unknown ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pegtool: pegging numbers, reach and weight certificates on graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kToolVersion));
    Globals g;
    app.add_option("--budget-states", g.budget_states, "max stored states per exhaustive search")->check(CLI::PositiveNumber);
    app.add_option("--budget-expansions", g.budget_expansions, "max expansions per witness search")->check(CLI::PositiveNumber);
    app.add_option("--cache", g.cache, "JSONL results cache (default: $PEGTOOL_CACHE)");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--timing", g.timing, "record wall time (output is then not byte-reproducible)");
    app.add_option("--seed", g.seed, "random seed");

    std::string spec;
    auto* gen = app.add_subcommand("gen", "build a graph and print its metrics");
    gen->add_option("spec", spec, "family DSL or edge-list file")->required();

    std::string pegs;
    std::string mode = "proper";
    std::optional<VertexId> target;
    auto* reach = app.add_subcommand("reach", "reach set of a distribution");
    reach->add_option("spec", spec)->required();
    reach->add_option("--pegs", pegs, "comma-separated vertex ids")->required();
    reach->add_option("--mode", mode, "proper|stacking|peggling");
    reach->add_option("--target", target, "query one target through the default pipeline");

    std::string quantity = "p";
    bool serial = false;
    auto* solve = app.add_subcommand("solve", "exact p(G) or P(G)");
    solve->add_option("spec", spec)->required();
    solve->add_option("--quantity", quantity, "p or P");
    solve->add_flag("--serial", serial, "use the serial enumeration kernel");

    std::string kind;
    bool verify_flag = false;
    auto* construct = app.add_subcommand("construct", "build a distribution from a known construction");
    construct->add_option("spec", spec)->required();
    construct->add_option("--kind", kind, "fib|caterpillar|lobster|adversarial")->required();
    construct->add_flag("--verify", verify_flag, "verify the Fibonacci distribution with the engine");

    std::size_t k = 0;
    std::uint64_t samples = 1000;
    auto* prob = app.add_subcommand("prob", "probability that a random size-k distribution pegs");
    prob->add_option("spec", spec)->required();
    prob->add_option("-k", k, "distribution size")->required();
    prob->add_option("-s,--samples", samples, "samples when enumeration is too large");

    std::string suite;
    std::optional<std::string> check;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "run an experiment suite (or 'all')");
    verify->add_option("suite", suite)->required();
    verify->add_option("--check", check, "run a single named check");
    verify->add_option("--out", out_path, "append JSONL results to this file");

    auto* scan = app.add_subcommand("scan-leaf", "p before and after deleting each leaf");
    scan->add_option("spec", spec)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(g, spec);
        if (*reach) return cmd_reach(g, spec, pegs, mode, target);
        if (*solve) return cmd_solve(g, spec, quantity, serial);
        if (*construct) return cmd_construct(g, spec, kind, verify_flag);
        if (*prob) return cmd_prob(g, spec, k, samples);
        if (*verify) return cmd_verify(g, suite, check, out_path);
        if (*scan) return cmd_scan_leaf(g, spec);
    } catch (const UsageError& e) {
        std::cerr << "pegtool: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pegtool: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "pegtool: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

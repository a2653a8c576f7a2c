#include "pegging/json_io.hpp"

#include <limits>

namespace peg {

Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

mpz_class mpz_from_json(const Json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json to_json(const GoldenNumber& x) {
    const mpq_class& a = x.rational_part();
    const mpq_class& b = x.omega_part();
    return Json{{"a_num", to_json(a.get_num())},
                {"a_den", to_json(a.get_den())},
                {"b_num", to_json(b.get_num())},
                {"b_den", to_json(b.get_den())},
                {"float_hint", x.to_double()}};
}

GoldenNumber golden_from_json(const Json& j) {
    mpq_class a(mpz_from_json(j.at("a_num")), mpz_from_json(j.at("a_den")));
    mpq_class b(mpz_from_json(j.at("b_num")), mpz_from_json(j.at("b_den")));
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

Json to_json(const WeightReport& r) {
    Json j = to_json(r.value);
    j["float_hint"] = r.float_hint;
    j["targets"] = r.targets;
    return j;
}

Json to_json(const Distribution& d) { return d.vertices(); }

Json to_json(const Move& m) {
    return Json{{"from", m.from}, {"over", m.over}, {"to", m.to}, {"kind", to_string(m.kind)}};
}

Json to_json(std::span<const Move> witness) {
    Json out = Json::array();
    for (const Move& m : witness) out.push_back(to_json(m));
    return out;
}

Json to_json(const TargetOutcome& o) {
    Json j{{"vertex", o.vertex}, {"status", to_string(o.status)}, {"evidence", to_string(o.evidence)}};
    if (o.status == Status::reachable) j["witness"] = to_json(o.witness);
    if (o.weight) j["weight"] = to_json(*o.weight);
    return j;
}

Json to_json(const ReachOutcome& o) {
    Json targets = Json::array();
    for (const auto& t : o.targets) targets.push_back(to_json(t));
    return Json{{"targets", targets},
                {"reachable", o.reachable()},
                {"states", o.stats.states},
                {"expansions", o.stats.expansions},
                {"complete", o.stats.complete}};
}

Json to_json(const SolveReport& r) {
    return Json{{"family", r.family},
                {"n", r.n},
                {"quantity", to_string(r.quantity)},
                {"value", r.value ? Json(*r.value) : Json("unknown")},
                {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
                {"counterexample", r.counterexample ? to_json(*r.counterexample) : Json(nullptr)},
                {"lower_bound", r.lower_bound},
                {"lower_bound_kind", to_string(r.lower_bound_kind)},
                {"states", r.states},
                {"millis", r.millis},
                {"version", r.version}};
}

Json to_json(const VerifyReport& r) {
    Json targets = Json::array();
    for (const auto& t : r.targets) targets.push_back(to_json(t));
    const char* verdict = r.verdict == CoverVerdict::pegs ? "pegs" : (r.verdict == CoverVerdict::does_not_peg ? "does-not-peg" : "unknown");
    return Json{{"verdict", verdict}, {"targets", targets}, {"states", r.stats.states}, {"expansions", r.stats.expansions}};
}

Json to_json(const ProbabilityEstimate& e) {
    return Json{{"k", e.k},
                {"trials", e.trials},
                {"successes", e.successes},
                {"unknown", e.unknown},
                {"exact", e.exact},
                {"estimate", e.estimate},
                {"stderr", e.standard_error}};
}

Json to_json(const AdversarialCertificate& c) {
    Json census = Json::array();
    for (const auto& row : c.census) census.push_back(Json{{"distance", row.distance}, {"pegged", row.pegged}, {"empty", row.empty}});
    return Json{{"height", c.height},
                {"target", c.target},
                {"vertex_count", c.vertex_count},
                {"base_pegs", c.base.size()},
                {"base_weight", to_json(c.base_weight)},
                {"refined_pegs", c.refined.size()},
                {"refined_weight", to_json(c.refined_weight)},
                {"census", census},
                {"stripped_distances", c.stripped_distances},
                {"removed_pegs", c.removed_pegs},
                {"added_pegs", c.added_pegs},
                {"empty_vertices", c.empty_vertices},
                {"implied_bound", "P >= |V| - " + std::to_string(c.empty_vertices - 1)},
                {"claimed_budget", AdversarialCertificate::kClaimedBudget}};
}

}  // namespace peg

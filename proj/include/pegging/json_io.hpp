#pragma once

#include <json.hpp>

#include "pegging/engine.hpp"
#include "pegging/golden.hpp"
#include "pegging/solvers.hpp"
#include "pegging/weights.hpp"

namespace peg {

using Json = nlohmann::json;

// Integers that fit in int64 are written as JSON numbers, larger ones as
// decimal strings.
Json to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);

// {a_num, a_den, b_num, b_den, float_hint}
Json to_json(const GoldenNumber& x);
GoldenNumber golden_from_json(const Json& j);
Json to_json(const WeightReport& r);

Json to_json(const Distribution& d);  // sorted vertex ids
Json to_json(const Move& m);
Json to_json(std::span<const Move> witness);
Json to_json(const TargetOutcome& o);
Json to_json(const ReachOutcome& o);
Json to_json(const SolveReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const ProbabilityEstimate& e);
Json to_json(const AdversarialCertificate& c);

}  // namespace peg

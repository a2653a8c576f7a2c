#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pegging/engine.hpp"

namespace peg {

// Where an expected value comes from: a result stated in the literature, a
// fact that needs no computation, or an independent computation.
enum class Provenance : std::uint8_t { published_result, trivial, computed_oracle };

std::string to_string(Provenance p);

struct SuiteOptions {
    SearchBudget budget;
    std::uint64_t seed = 1;
    bool timing = false;  // record wall time per check (breaks byte-identical output)
};

struct CheckResult {
    std::string suite;
    std::string criterion;  // "AC1".."AC13"
    std::string name;
    Provenance provenance = Provenance::computed_oracle;
    std::string expected;
    std::string observed;
    std::string tolerance;  // "exact" or a numeric bound
    bool passed = false;
    double millis = 0.0;
};

struct SuiteReport {
    std::string name;
    std::string criterion;
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct SuiteInfo {
    std::string name;
    std::string criterion;
    std::string summary;
};

std::vector<SuiteInfo> suite_catalog();

// Names of the checks in a suite, in run order.
std::vector<std::string> suite_checks(const std::string& name);

// Runs every check of the suite (or only `only`). Throws
// std::invalid_argument for an unknown suite or check name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {},
                      const std::optional<std::string>& only = std::nullopt);

// One JSON object per check.
void write_jsonl(const SuiteReport& report, std::ostream& out);

}  // namespace peg

#pragma once

// Seeded invariant suites behind `k3n verify`.

#include "k3n/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace k3n {

enum class Suite { Lattice, Classifier, K3, Period };
enum class Budget { Small, Full };

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
};

/// Parses "lattice", "classifier", "k3", "period" or "all" (all four, in
/// that order); throws InputError otherwise.
std::vector<Suite> parse_suites(const std::string& name);
Budget parse_budget(const std::string& name);
std::string suite_name(Suite s);

/// Runs the suites in order. A lattice fixture (a lattice JSON object, as
/// read from file) is compared against the standard lattice of the same
/// label as part of the lattice suite.
std::vector<SuiteResult> run_verification(const std::vector<Suite>& suites, Budget budget, std::uint64_t seed,
                                          const std::optional<nlohmann::ordered_json>& fixture = std::nullopt);

}  // namespace k3n

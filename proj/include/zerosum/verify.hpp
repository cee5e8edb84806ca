#pragma once

// Verification suites: named batteries of exact checks with a
// machine-readable report.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zerosum/json_io.hpp"
#include "zerosum/search.hpp"

namespace zerosum {

struct Check {
    std::string id;
    std::string description;
    Json expected;
    Json actual;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;
    double wall_time = 0;
    std::map<std::string, std::uint64_t> node_counts;

    bool passed() const;
    /// Records a check; pass is expected == actual.
    void add(std::string id, std::string description, Json expected, Json actual);
};

Json to_json(const VerifyReport& report);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
    /// Parameter of C2 + C2 + C2n for the "paper" suite, of C_n for "cyclic".
    int n = 2;
    std::uint64_t seed = kDefaultSeed;
    /// Trials for the randomized suites.
    int trials = 10000;
    SearchOptions search;
};

/// paper, cyclic, elementary, oracle, filter.
std::vector<std::string> suite_names();

/// Throws ParameterOutOfRange for an unknown suite; BudgetExceeded
/// propagates from the searches.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace zerosum

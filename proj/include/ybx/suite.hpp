#pragma once
// The full verification suite: one callable check per acceptance criterion,
// shared between the CLI `suite` subcommand and the acceptance test binary.
#include "ybx/chain.hpp"
#include "ybx/equivalence.hpp"
#include "ybx/json_io.hpp"

namespace ybx {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteConfig {
    std::vector<int> dims = {3, 4, 5, 6, 7, 8};
    bool include_so8_rrr = false;
    int grid_scale = 1;
    std::string output_dir;               // per-check JSON reports when set
    std::string fixture_dir = "fixtures"; // entry-table fixtures
};

// the eleven criterion checks, in order
std::vector<CheckResult> run_suite(const SuiteConfig& cfg);

ordered_json suite_json(const std::vector<CheckResult>& results);

} // namespace ybx

// Acceptance gate: runs the full verification suite with the default
// configuration and prints one verdict line per criterion. Exit status is 0
// exactly when every criterion passes.
#include "ybx/suite.hpp"

#include <cstdio>

int main() {
    ybx::SuiteConfig cfg; // defaults: dims 3..8, so(8) RRR excluded
    std::vector<ybx::CheckResult> results = ybx::run_suite(cfg);
    bool all = true;
    for (const ybx::CheckResult& r : results) {
        std::printf("criterion %d (%s): %s\n", r.criterion, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL");
        if (!r.pass && !r.detail.empty()) std::printf("  %s\n", r.detail.c_str());
        all = all && r.pass;
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}

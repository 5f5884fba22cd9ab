#pragma once

#include <string>
#include <vector>

#include "qrc/report.hpp"

namespace qrc {

/// Aggregate of one suite run. `reports` is sorted by canonical key, so
/// identical inputs serialize byte-identically regardless of worker schedule.
struct SuiteResult {
    std::string suite;
    int max_m = 0;
    std::vector<VerificationReport> reports;
    int identities_passed = 0;
    int identities_failed = 0;
    int conjectures_confirmed = 0;
    int conjectures_refuted = 0;

    /// Exit status reflects non-conjecture failures only.
    bool ok() const { return identities_failed == 0; }
};

/// Registered suite names, `all` last.
std::vector<std::string> suite_names();

/// Runs one named suite. Board suites read max_m as a bound on m (n <= m);
/// graph suites (gp-theorem, an-theorem, llt-relations, coloring-recursions)
/// read it as a bound on m+n. jobs <= 0 means hardware parallelism.
SuiteResult run_suite(const std::string& name, int max_m, int jobs = 0);

}  // namespace qrc

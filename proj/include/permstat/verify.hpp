#pragma once

#include <string>
#include <vector>

namespace permstat {

/// Outcome of one invariant suite. A failed suite always carries a
/// counterexample description.
struct VerificationReport {
    std::string suite;
    std::string range;
    bool passed = true;
    std::string counterexample;
};

/// Names of all registered invariant suites.
std::vector<std::string> suite_names();

/// Runs one suite with exhaustive sweeps up to rank max_n.
VerificationReport run_suite(const std::string& name, int max_n, int jobs = 1);

/// Runs every suite.
std::vector<VerificationReport> run_all_suites(int max_n, int jobs = 1);

}  // namespace permstat

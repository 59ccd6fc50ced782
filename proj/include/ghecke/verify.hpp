#pragma once

#include "ghecke/cyclo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghk {

/// Configuration for the named verification suites.
struct VerifyConfig {
    int r = 2;
    int n = 2;
    std::optional<std::vector<Cyclo>> k;  // k_1..k_{r-1}; random when absent
    std::optional<Cyclo> kbar0;           // random nonzero when absent
    int fuzz = 200;
    unsigned seed = 1;
    int param_sets = 5;  // random parameter sets when k/kbar0 absent
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs one of {relations, pbw, realization, center, duality}.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyConfig& cfg);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace ghk

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilie {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Identity and cross-oracle suites shared by the CLI `verify` command and
// the acceptance harness.
std::vector<CheckResult> verify_regular_sum(int nmax);
std::vector<CheckResult> verify_kw_witt(int nmax);
std::vector<CheckResult> verify_swanson(int nmax);
std::vector<CheckResult> verify_gluing(int max_total, uint64_t seed, int pairs);
std::vector<CheckResult> verify_lr_oracle(int max_total);
std::vector<CheckResult> verify_mn_oracle(int nmax);

bool all_pass(const std::vector<CheckResult>& results);

} // namespace hilie

#pragma once

// The exhaustive verification sweep: every identity the library claims,
// run over all valid inputs up to a bound on l, plus the input-independent
// kernel cross-checks. Also the per-input check battery used by analyze.

#include "schubert/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace schubert {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // expected vs got on failure, scope notes otherwise
};

// Identity battery for one input; names are stable and deterministic.
std::vector<CheckResult> input_checks(const SchubertInput& in);

// Kernel checks with no input attached: Gaussian binomials against the
// enumeration oracle, Pieri against LR, LR against the tableau oracle,
// full-rectangle products, Lefschetz ranks, basis-count duality.
std::vector<CheckResult> kernel_checks();

// All (i,j,k,l) with 0 < i < k <= j < l <= max_l and k-i < l-j,
// sorted by (l, k, j, i).
std::vector<std::array<int, 4>> valid_tuples(int max_l);

struct VerifyOptions {
    int max_l = 10;
    int jobs = 1;
};

struct VerifyRow {
    int i = 0, j = 0, k = 0, l = 0;  // all zero for kernel checks
    std::string check;
    std::string status;  // "pass" or "fail"
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyRow> failures;  // deterministic order
    long tuples = 0;
    long non_small_tuples = 0;
    long checks_run = 0;
    bool ok() const { return failures.empty(); }
};

VerifyResult run_verify(const VerifyOptions& opts);

std::string verify_summary(const VerifyOptions& opts, const VerifyResult& result);
std::string failures_csv(const VerifyResult& result);  // i,j,k,l,check,status,detail

}  // namespace schubert

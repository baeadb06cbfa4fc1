#include "schubert/verify.hpp"

#include "testutil.hpp"

#include <algorithm>

using namespace schubert;

int main() {
    // kernel checks all pass
    for (const auto& check : kernel_checks())
        CHECK_MSG(check.pass, check.name + ": " + check.detail);

    // tuple enumeration
    auto t4 = valid_tuples(4);
    CHECK(t4.size() == 1);
    CHECK(t4[0] == (std::array<int, 4>{1, 2, 2, 4}));
    auto t8 = valid_tuples(8);
    CHECK(t8.size() == 46);
    CHECK(std::find(t8.begin(), t8.end(), std::array<int, 4>{2, 5, 4, 8}) != t8.end());
    long non_small = 0;
    for (const auto& t : t8)
        if (t[3] - t[1] < t[2]) ++non_small;
    CHECK(non_small == 16);
    CHECK(valid_tuples(10).size() == 130);
    // sorted by (l, k, j, i)
    for (size_t idx = 1; idx < t8.size(); ++idx) {
        const auto& a = t8[idx - 1];
        const auto& b = t8[idx];
        CHECK(std::make_tuple(a[3], a[2], a[1], a[0]) < std::make_tuple(b[3], b[2], b[1], b[0]));
    }

    // per-input battery is green on the worked instance
    for (const auto& check : input_checks(validate(2, 5, 4, 8)))
        CHECK_MSG(check.pass, check.name + ": " + check.detail);
    // and on a k < c all-small input, where several checks are scoped
    for (const auto& check : input_checks(validate(1, 2, 2, 5)))
        CHECK_MSG(check.pass, check.name + ": " + check.detail);

    // full library-level sweep
    VerifyResult result = run_verify({8, 1});
    CHECK(result.ok());
    CHECK(result.tuples == 46 && result.non_small_tuples == 16);
    VerifyResult parallel = run_verify({8, 4});
    CHECK(parallel.ok() && parallel.checks_run == result.checks_run);

    // summary and CSV shapes
    std::string summary = verify_summary({4, 1}, run_verify({4, 1}));
    CHECK(summary.find("no non-small inputs exist") != std::string::npos);
    CHECK(failures_csv(result) == "i,j,k,l,check,status,detail\n");

    return testutil::finish("test_verify");
}

#include "schubert/geometry.hpp"

#include "schubert/verify.hpp"
#include "testutil.hpp"

#include <cstring>
#include <string>

using namespace schubert;

namespace {

std::string error_text(int i, int j, int k, int l) {
    try {
        validate(i, j, k, l);
    } catch (const validation_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

int main() {
    // validation
    SchubertInput in = validate(2, 5, 4, 8);
    CHECK(in.r == 2 && in.c == 3 && in.regime == Regime::non_small);
    CHECK(in.strata() == 3 && in.i_p(1) == 4 && in.i_p(3) == 2);
    CHECK(error_text(1, 3, 3, 5).find("r < c violated") != std::string::npos);
    CHECK(error_text(2, 4, 6, 8).find("k <= j violated") != std::string::npos);
    CHECK(error_text(0, 5, 4, 8).find("0 < i violated") != std::string::npos);
    CHECK(error_text(3, 5, 3, 8).find("i < k violated") != std::string::npos);
    CHECK(error_text(2, 8, 4, 8).find("j < l violated") != std::string::npos);
    CHECK(validate(1, 2, 2, 4).regime == Regime::all_small);
    CHECK(validate(1, 3, 3, 6).regime == Regime::all_small);  // boundary c = k

    // stratum invariants for the worked instance
    StratumTable strata = stratum_invariants(in);
    CHECK(strata.strata.size() == 3);
    CHECK(strata.strata[0].i_p == 4 && strata.strata[0].m_p == 4);
    CHECK(strata.strata[1].i_p == 3 && strata.strata[1].m_p == 10);
    CHECK(strata.strata[2].i_p == 2 && strata.strata[2].m_p == 14);
    CHECK(strata.n == 14);

    // pair invariants; kbar follows the (p-q)(c-p+1) formula
    PairTable pairs = pair_invariants(in);
    CHECK(pairs.pairs.size() == 3);
    const auto& p21 = pairs.at(2, 1);
    CHECK(p21.k_pq == 3 && p21.d_pq == 3 && p21.delta_pq == 0 && p21.kbar_pq == 2);
    const auto& p32 = pairs.at(3, 2);
    CHECK(p32.k_pq == 2 && p32.d_pq == 2 && p32.delta_pq == 0 && p32.kbar_pq == 1);
    const auto& p31 = pairs.at(3, 1);
    CHECK(p31.k_pq == 4 && p31.d_pq == 6 && p31.delta_pq == -2 && p31.kbar_pq == 2);
    CHECK_THROWS(pairs.at(1, 2), std::out_of_range);

    // smallness per resolution
    auto reports = resolution_smallness(in);
    CHECK(reports.size() == 3);
    CHECK(reports[0].xi_small && reports[0].pi_small);  // p=1 vacuous
    CHECK(reports[1].xi_small && !reports[1].pi_small && reports[1].pi_semismall);
    CHECK(reports[2].xi_small && !reports[2].pi_small && reports[2].pi_semismall);
    // xi_3 inequalities: kbar_32 = 1 < 3, kbar_31 = 2 < 8
    CHECK(p32.kbar_pq < strata.m(3) - strata.m(2) - p32.kbar_pq);
    CHECK(p31.kbar_pq < strata.m(3) - strata.m(1) - p31.kbar_pq);
    // k < c: the small resolution of the top stratum is only semismall
    auto all_small_reports = resolution_smallness(validate(1, 2, 2, 5));
    CHECK(!all_small_reports[1].xi_small && all_small_reports[1].pi_small);
    // boundary c = k keeps xi small
    for (const auto& rep : resolution_smallness(validate(1, 3, 3, 6))) CHECK(rep.xi_small);

    // fibers
    auto fibers = fiber_descriptors(in, 3, 2);
    CHECK(fibers.size() == 3);
    CHECK(fibers[0].kind == FiberKind::F_p && fibers[0].a == 2 && fibers[0].b == 2 &&
          fibers[0].dim() == 0);
    CHECK(fibers[1].kind == FiberKind::F_pq && fibers[1].a == 2 && fibers[1].b == 3 &&
          fibers[1].dim() == 2);
    CHECK(fibers[2].kind == FiberKind::G_pq && fibers[2].a == 1 && fibers[2].b == 2 &&
          fibers[2].dim() == 1);
    auto g21 = fiber_descriptors(in, 2, 1);
    CHECK(g21[2].kind == FiberKind::G_pq && g21[2].a == 1 && g21[2].b == 3 && g21[2].dim() == 2);
    CHECK(fiber_descriptors(in, 2).size() == 1);
    CHECK_THROWS(fiber_descriptors(in, 4), std::out_of_range);
    CHECK_THROWS(fiber_descriptors(in, 2, 2), std::out_of_range);

    // identity sweep over every valid input with l <= 12
    for (const auto& t : valid_tuples(12)) {
        SchubertInput sweep_in = validate(t[0], t[1], t[2], t[3]);
        StratumTable st = stratum_invariants(sweep_in);
        PairTable pt = pair_invariants(sweep_in);
        for (const auto& pi : pt.pairs) {
            CHECK(pi.k_pq == pi.d_pq + pi.delta_pq);
            CHECK(st.m(pi.p) - st.m(pi.q) == pi.k_pq + pi.d_pq);
            auto fds = fiber_descriptors(sweep_in, pi.p, pi.q);
            CHECK(fds[1].dim() == pi.k_pq);
            CHECK(fds[2].dim() == pi.kbar_pq);
        }
        for (int p = 1; p <= sweep_in.r; ++p) {
            long long gap = static_cast<long long>(sweep_in.r + 1 - p) *
                            (sweep_in.c + sweep_in.k + 1 - sweep_in.r - p);
            CHECK(st.n - st.m(p) == gap && gap > 0);
        }
        if (sweep_in.regime == Regime::non_small)
            for (const auto& rep : resolution_smallness(sweep_in)) CHECK(rep.xi_small);
    }

    return testutil::finish("test_geometry");
}

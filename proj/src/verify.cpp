#include "schubert/verify.hpp"

#include "schubert/decomposition.hpp"
#include "schubert/laurent.hpp"
#include "schubert/oracle.hpp"
#include "schubert/partition.hpp"
#include "schubert/schur.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace schubert {

namespace {

std::string tuple_tag(const SchubertInput& in) {
    std::ostringstream out;
    out << "(" << in.i << "," << in.j << "," << in.k << "," << in.l << ")";
    return out.str();
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult check_geometry_identities(const SchubertInput& in) {
    const std::string name = "geometry_identities";
    StratumTable strata = stratum_invariants(in);
    PairTable pairs = pair_invariants(in);
    for (const auto& pi : pairs.pairs) {
        long long gap = strata.m(pi.p) - strata.m(pi.q);
        if (pi.k_pq != pi.d_pq + pi.delta_pq)
            return fail(name, "k != d + delta at (" + std::to_string(pi.p) + "," +
                                  std::to_string(pi.q) + ")");
        if (gap != pi.k_pq + pi.d_pq)
            return fail(name, "m_p - m_q != k + d at (" + std::to_string(pi.p) + "," +
                                  std::to_string(pi.q) + ")");
        auto fibers = fiber_descriptors(in, pi.p, pi.q);
        for (const auto& fd : fibers) {
            if (fd.kind == FiberKind::F_pq && fd.dim() != pi.k_pq)
                return fail(name, "dim F_pq mismatch");
            if (fd.kind == FiberKind::G_pq && fd.dim() != pi.kbar_pq)
                return fail(name, "dim G_pq mismatch");
        }
    }
    for (int p = 1; p <= in.r; ++p) {
        long long expect =
            static_cast<long long>(in.r + 1 - p) * (in.c + in.k + 1 - in.r - p);
        if (strata.n - strata.m(p) != expect || expect <= 0)
            return fail(name, "n - m_p formula fails at p=" + std::to_string(p));
    }
    return pass(name);
}

CheckResult check_smallness(const SchubertInput& in) {
    const std::string name = "smallness";
    auto reports = resolution_smallness(in);
    PairTable pairs = pair_invariants(in);
    if (in.regime == Regime::non_small) {
        for (const auto& rep : reports) {
            if (!rep.xi_small)
                return fail(name, "xi_" + std::to_string(rep.p) + " not small in non-small regime");
            if (rep.p >= 2) {
                bool some_obstruction = false;
                for (int q = 1; q < rep.p; ++q)
                    some_obstruction = some_obstruction || pairs.at(rep.p, q).delta_pq >= 0;
                if (!some_obstruction || rep.pi_small)
                    return fail(name, "pi_" + std::to_string(rep.p) +
                                          " unexpectedly small in non-small regime");
            }
        }
    } else {
        for (const auto& rep : reports)
            if (!rep.pi_small && rep.p >= 2)
                return fail(name, "pi_" + std::to_string(rep.p) + " not small in all-small regime");
    }
    return pass(name);
}

CheckResult check_triple_oracle(const SchubertInput& in) {
    const std::string name = "triple_oracle";
    IHTable rec = ih_recursion(in);
    IHTable mat = ih_matrix(in);
    auto reports = resolution_smallness(in);
    int oracle_sites = 0, h_sites = 0;
    for (int p = 1; p <= in.strata(); ++p) {
        if (rec.ih(p) != mat.ih(p))
            return fail(name, "recursion vs matrix differ at p=" + std::to_string(p));
        bool xi_small = reports[static_cast<size_t>(p - 1)].xi_small;
        if (xi_small) {
            LaurentPoly oracle = small_resolution_oracle(in, p);
            if (rec.ih(p) != oracle)
                return fail(name, "p=" + std::to_string(p) + " expected " + oracle.str() +
                                      " got " + rec.ih(p).str());
            ++oracle_sites;
        } else {
            // xi_p is small iff c <= k; otherwise pi_p itself is small, so
            // IH = H and the oracle must refuse with its precondition error.
            if (rec.ih(p) != rec.h(p))
                return fail(name, "I_p != H_p at p=" + std::to_string(p) + " with k < c");
            bool threw = false;
            try {
                small_resolution_oracle(in, p);
            } catch (const smallness_error&) {
                threw = true;
            }
            if (!threw)
                return fail(name, "missing smallness error at p=" + std::to_string(p));
            ++h_sites;
        }
    }
    std::ostringstream detail;
    detail << oracle_sites << " small-resolution sites";
    if (h_sites) detail << ", " << h_sites << " k<c sites via I=H";
    return pass(name, detail.str());
}

CheckResult check_poincare_duality(const SchubertInput& in) {
    const std::string name = "poincare_duality";
    IHTable table = ih_recursion(in);
    StratumTable strata = stratum_invariants(in);
    for (int p = 1; p <= in.strata(); ++p) {
        const LaurentPoly& ip = table.ih(p);
        if (!is_palindromic(ip, static_cast<int>(strata.m(p))))
            return fail(name, "I_" + std::to_string(p) + " not palindromic about m_p");
        for (const auto& [e, c] : ip.terms())
            if (e % 2 != 0 || c <= 0 || e < 0 || e > 2 * strata.m(p))
                return fail(name, "I_" + std::to_string(p) + " has a bad term at t^" +
                                      std::to_string(e));
    }
    return pass(name);
}

CheckResult check_decomposition_identity(const SchubertInput& in) {
    const std::string name = "decomposition_identity";
    IHTable table = ih_recursion(in);
    for (int p = 1; p <= in.strata(); ++p) {
        LaurentPoly sum = table.ih(p);
        for (int q = 1; q < p; ++q) sum += table.P.at({p, q});
        if (sum != table.h(p))
            return fail(name, "H_p != I_p + sum P_pq at p=" + std::to_string(p));
    }
    return pass(name);
}

CheckResult check_euler_count(const SchubertInput& in) {
    const std::string name = "euler_count";
    IHTable table = ih_recursion(in);
    auto reports = resolution_smallness(in);
    for (int p = 1; p <= in.strata(); ++p) {
        Int h_expect = binomial_coefficient(in.j, in.i_p(p)) *
                       binomial_coefficient(in.l - in.i_p(p), p - 1);
        if (table.h(p).at_one() != h_expect)
            return fail(name, "H_" + std::to_string(p) + "(1) != C(j,i_p)*C(l-i_p,p-1)");
        if (reports[static_cast<size_t>(p - 1)].xi_small) {
            // Euler characteristic of the small-resolution total space
            Int i_expect = binomial_coefficient(in.c, p - 1) *
                           binomial_coefficient(in.k + in.j - in.i_p(p), in.k);
            if (table.ih(p).at_one() != i_expect)
                return fail(name, "I_" + std::to_string(p) + "(1) != C(c,p-1)*C(k+j-i_p,k)");
        } else if (table.ih(p).at_one() != table.h(p).at_one()) {
            return fail(name, "I_" + std::to_string(p) + "(1) != H_" + std::to_string(p) +
                                  "(1) with k < c");
        }
    }
    return pass(name);
}

CheckResult check_stalk_support(const SchubertInput& in) {
    const std::string name = "stalk_support";
    if (in.k < in.c)
        return pass(name, "k < c: small-resolution stalk description out of scope");
    StratumTable strata = stratum_invariants(in);
    for (const auto& pi : pair_invariants(in).pairs) {
        LaurentPoly stalk = stalk_table(in, pi.p, pi.q);
        if (stalk.max_exp() != 2 * pi.kbar_pq)
            return fail(name, "stalk top degree != 2*kbar at (" + std::to_string(pi.p) + "," +
                                  std::to_string(pi.q) + ")");
        if (2 * pi.kbar_pq >= strata.m(pi.p) - strata.m(pi.q))
            return fail(name, "support bound 2*kbar < m_p - m_q fails at (" +
                                  std::to_string(pi.p) + "," + std::to_string(pi.q) + ")");
    }
    return pass(name);
}

CheckResult check_classifier(const SchubertInput& in) {
    const std::string name = "classifier";
    try {
        for (int p = 2; p <= in.strata(); ++p) {
            for (int l = 1; l < p; ++l) {
                Rectangle rect{p - l, in.i_p(p)};
                for (const auto& bucket : enumerate_by_weight(rect))
                    for (const auto& nu : bucket) classify_stratum(nu, p, l, in.c);
            }
        }
    } catch (const classification_error& e) {
        return fail(name, e.what());
    }
    return pass(name);
}

CheckResult check_local_decomposition(const SchubertInput& in) {
    const std::string name = "local_decomposition";
    for (int p = 2; p <= in.strata(); ++p) {
        for (int l = 1; l < p; ++l) {
            LocalDecomposition dec = local_decomposition(in, p, l);
            if (!dec.ok()) {
                std::string what = !dec.gysin_bijection ? "gysin bijection"
                                   : !dec.cokernel_is_b_basis ? "cokernel basis"
                                                              : "count identity";
                return fail(name, what + " fails at (p=" + std::to_string(p) +
                                      ", l=" + std::to_string(l) + ")");
            }
        }
    }
    return pass(name);
}

CheckResult check_gysin_image(const SchubertInput& in) {
    const std::string name = "gysin_image";
    for (const auto& pi : pair_invariants(in).pairs) {
        SpaceBasis a = space_rectangle(SpaceKind::A, in, pi.p, pi.q);
        SpaceBasis d = space_rectangle(SpaceKind::D, in, pi.p, pi.q);
        SpaceBasis e = space_rectangle(SpaceKind::E, in, pi.p, pi.q);
        long members = 0;
        for (const auto& bucket : enumerate_by_weight(a.rect))
            for (const auto& nu : bucket)
                if (in_gysin_image(nu, in, pi.p, pi.q)) ++members;
        long d_count = 0;
        if (!d.empty)
            for (const auto& bucket : enumerate_by_weight(d.rect))
                d_count += static_cast<long>(bucket.size());
        if (members != d_count)
            return fail(name, "E basis size != D basis size at (" + std::to_string(pi.p) +
                                  "," + std::to_string(pi.q) + ")");
        if (!d.empty) {
            // E is the D basis raised by c+1-q on every part
            for (const auto& bucket : enumerate_by_weight(d.rect))
                for (const auto& mu : bucket) {
                    Partition raised = add_to_parts(mu, e.rect.rows, e.part_shift);
                    if (!in_gysin_image(raised, in, pi.p, pi.q))
                        return fail(name, "raised D element escapes the image at (" +
                                              std::to_string(pi.p) + "," +
                                              std::to_string(pi.q) + ")");
                }
        }
    }
    return pass(name);
}

CheckResult check_summand_symmetry(const SchubertInput& in) {
    const std::string name = "summand_symmetry";
    PairTable pairs = pair_invariants(in);
    for (int p = 2; p <= in.strata(); ++p) {
        SummandTable table = summand_table(in, p);
        for (const auto& entry : table.entries) {
            long long delta = pairs.at(p, entry.q).delta_pq;
            for (const auto& [shift, mult] : entry.mults) {
                auto mirror = entry.mults.find(-shift);
                if (mirror == entry.mults.end() || mirror->second != mult)
                    return fail(name, "multiplicities not symmetric at (p=" +
                                          std::to_string(p) + ", q=" + std::to_string(entry.q) +
                                          ", i=" + std::to_string(shift) + ")");
                if (std::abs(shift) > delta || (delta + shift) % 2 != 0)
                    return fail(name, "multiplicity outside |i| <= delta or parity at (p=" +
                                          std::to_string(p) + ", q=" + std::to_string(entry.q) +
                                          ")");
            }
            if (delta < 0 && !entry.mults.empty())
                return fail(name, "nonzero summand with delta < 0");
        }
    }
    return pass(name);
}

CheckResult check_hard_lefschetz(const SchubertInput& in) {
    const std::string name = "hard_lefschetz";
    PerverseTable table = perverse_table(in);
    for (const auto& [shift, list] : table) {
        auto mirror = table.find(-shift);
        if (mirror == table.end())
            return fail(name, "perverse table misses shift " + std::to_string(-shift));
        auto project = [](const std::vector<PerverseEntry>& v) {
            std::vector<std::pair<int, long long>> out;
            for (const auto& e : v) out.emplace_back(e.ic_top ? -1 : e.q, e.mult);
            return out;
        };
        if (shift != 0 && project(list) != project(mirror->second))
            return fail(name, "perverse table not symmetric at shift " + std::to_string(shift));
    }
    for (const auto& pi : pair_invariants(in).pairs) {
        if (pi.delta_pq < 0) continue;
        if (!hard_lefschetz_verify(in, pi.p, pi.q))
            return fail(name, "Lefschetz power matrix rank fails at (" + std::to_string(pi.p) +
                                  "," + std::to_string(pi.q) + ")");
    }
    return pass(name);
}

CheckResult check_all_small_regime(const SchubertInput& in) {
    const std::string name = "all_small_regime";
    if (in.regime != Regime::all_small) return pass(name, "non-small regime");
    IHTable table = ih_recursion(in);
    for (int p = 1; p <= in.strata(); ++p) {
        if (table.ih(p) != table.h(p))
            return fail(name, "I_p != H_p at p=" + std::to_string(p));
        for (const auto& entry : summand_table(in, p).entries)
            if (!entry.mults.empty())
                return fail(name, "non-trivial summand at p=" + std::to_string(p) +
                                      ", q=" + std::to_string(entry.q));
    }
    PerverseTable perverse = perverse_table(in);
    if (perverse.size() != 1 || perverse.begin()->first != 0 ||
        perverse.begin()->second.size() != 1 || !perverse.begin()->second.front().ic_top)
        return fail(name, "perverse table is not just the top IC at shift 0");
    return pass(name);
}

}  // namespace

std::vector<CheckResult> input_checks(const SchubertInput& in) {
    std::vector<CheckResult> out;
    out.push_back(check_geometry_identities(in));
    out.push_back(check_smallness(in));
    out.push_back(check_triple_oracle(in));
    out.push_back(check_poincare_duality(in));
    out.push_back(check_decomposition_identity(in));
    out.push_back(check_euler_count(in));
    out.push_back(check_stalk_support(in));
    out.push_back(check_classifier(in));
    out.push_back(check_local_decomposition(in));
    out.push_back(check_gysin_image(in));
    out.push_back(check_summand_symmetry(in));
    out.push_back(check_hard_lefschetz(in));
    out.push_back(check_all_small_regime(in));
    for (auto& result : out) {
        if (!result.pass && !result.detail.empty())
            result.detail = tuple_tag(in) + ": " + result.detail;
    }
    return out;
}

namespace {

CheckResult check_gaussian_kernel() {
    const std::string name = "gaussian_kernel";
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            LaurentPoly value = gaussian_binomial(n, k, 2);
            if (n >= 1) {
                LaurentPoly pascal =
                    gaussian_binomial(n - 1, k - 1, 2) + gaussian_binomial(n - 1, k, 2).shifted(2 * k);
                if (value != pascal)
                    return fail(name, "Pascal recurrence fails at n=" + std::to_string(n) +
                                          ", k=" + std::to_string(k));
            }
            if (value.at_one() != binomial_coefficient(n, k))
                return fail(name, "evaluation at 1 fails at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k));
            if (!is_palindromic(value, k * (n - k)))
                return fail(name, "palindromy fails at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k));
            if (n <= 10 && value != gaussian_by_enumeration(k, n))
                return fail(name, "enumeration oracle disagrees at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k) + ": expected " +
                                      gaussian_by_enumeration(k, n).str() + " got " + value.str());
        }
    }
    return pass(name);
}

CheckResult check_pieri_lr() {
    const std::string name = "pieri_lr_consistency";
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 4; ++cols) {
            RingSpec spec{rows, cols};
            auto buckets = enumerate_by_weight(spec.rect());
            for (const auto& bucket : buckets) {
                for (const auto& lam : bucket) {
                    SchurVector base = SchurVector::basis_element(spec, lam);
                    for (int m = 0; m <= cols; ++m) {
                        SchurVector row_class =
                            SchurVector::basis_element(spec, m ? Partition{m} : Partition());
                        if (lr_multiply(base, row_class) != pieri_row(spec, lam, m))
                            return fail(name, "row Pieri mismatch in " + std::to_string(rows) +
                                                  "x" + std::to_string(cols) + " at (" +
                                                  to_text(lam) + "), m=" + std::to_string(m));
                    }
                    for (int m = 0; m <= rows; ++m) {
                        Partition col_part(std::vector<int>(static_cast<size_t>(m), 1));
                        SchurVector col_class = SchurVector::basis_element(spec, col_part);
                        if (lr_multiply(base, col_class) != pieri_column(spec, lam, m))
                            return fail(name, "column Pieri mismatch in " + std::to_string(rows) +
                                                  "x" + std::to_string(cols) + " at (" +
                                                  to_text(lam) + "), m=" + std::to_string(m));
                    }
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_tableau_oracle() {
    const std::string name = "tableau_oracle";
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 3; ++cols) {
            RingSpec spec{rows, cols};
            std::vector<Partition> basis;
            for (const auto& bucket : enumerate_by_weight(spec.rect()))
                for (const auto& lam : bucket) basis.push_back(lam);
            for (const auto& lam : basis)
                for (const auto& mu : basis)
                    if (!brute_product_check(spec, lam, mu))
                        return fail(name, "monomial expansion disagrees in " +
                                              std::to_string(rows) + "x" + std::to_string(cols) +
                                              " at (" + to_text(lam) + ")*(" + to_text(mu) + ")");
        }
    }
    return pass(name);
}

CheckResult check_rectangle_product() {
    const std::string name = "rectangle_product_via_lr";
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 3; ++cols) {
            RingSpec spec{rows, cols};
            for (int a = 0; a <= std::min(2, cols); ++a) {
                Partition full = a ? Partition(std::vector<int>(static_cast<size_t>(rows), a))
                                   : Partition();
                SchurVector full_class = SchurVector::basis_element(spec, full);
                for (const auto& bucket : enumerate_by_weight(spec.rect()))
                    for (const auto& lam : bucket) {
                        SchurVector via_lr =
                            lr_multiply(SchurVector::basis_element(spec, lam), full_class);
                        if (via_lr != multiply_by_full_rectangle(spec, lam, a))
                            return fail(name, "mismatch in " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " at (" + to_text(lam) +
                                                  "), a=" + std::to_string(a));
                    }
            }
        }
    }
    return pass(name);
}

CheckResult check_lefschetz_rings() {
    const std::string name = "lefschetz_rings";
    for (int rows = 0; rows <= 12; ++rows) {
        for (int cols = 0; cols <= 12; ++cols) {
            if (rows * cols > 12) continue;
            RingSpec spec{rows, cols};
            for (int i = 0; i <= rows * cols; ++i) {
                IntMatrix m = lefschetz_power_matrix(spec, i);
                if (m.empty()) continue;
                if (m.size() != m[0].size())
                    return fail(name, "non-square matrix for " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + ", i=" + std::to_string(i));
                if (matrix_rank_exact(m) != static_cast<int>(m.size()))
                    return fail(name, "rank deficit for " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + ", i=" + std::to_string(i));
            }
        }
    }
    return pass(name);
}

CheckResult check_basis_duality() {
    const std::string name = "basis_count_duality";
    for (int rows = 0; rows <= 12; ++rows) {
        for (int cols = 0; cols <= 12; ++cols) {
            long boxes = static_cast<long>(rows) * cols;
            if (boxes > 20) continue;
            auto buckets = enumerate_by_weight({rows, cols});
            Int total = 0;
            for (size_t w = 0; w < buckets.size(); ++w) {
                total += static_cast<long long>(buckets[w].size());
                if (buckets[w].size() != buckets[static_cast<size_t>(boxes) - w].size())
                    return fail(name, "weight counts not palindromic for " +
                                          std::to_string(rows) + "x" + std::to_string(cols));
            }
            if (total != binomial_coefficient(rows + cols, rows))
                return fail(name, "total count != C(rows+cols, rows) for " +
                                      std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    return pass(name);
}

}  // namespace

std::vector<CheckResult> kernel_checks() {
    return {check_gaussian_kernel(), check_pieri_lr(),        check_tableau_oracle(),
            check_rectangle_product(), check_lefschetz_rings(), check_basis_duality()};
}

std::vector<std::array<int, 4>> valid_tuples(int max_l) {
    std::vector<std::array<int, 4>> out;
    for (int l = 1; l <= max_l; ++l)
        for (int k = 1; k < l; ++k)
            for (int j = k; j < l; ++j)
                for (int i = 1; i < k; ++i)
                    if (k - i < l - j) out.push_back({i, j, k, l});
    return out;
}

VerifyResult run_verify(const VerifyOptions& opts) {
    VerifyResult result;

    for (const auto& check : kernel_checks()) {
        ++result.checks_run;
        if (!check.pass) result.failures.push_back({0, 0, 0, 0, check.name, "fail", check.detail});
    }

    auto tuples = valid_tuples(opts.max_l);
    result.tuples = static_cast<long>(tuples.size());
    std::vector<std::vector<CheckResult>> per_tuple(tuples.size());

    const int jobs = std::max(1, opts.jobs);
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            size_t idx = cursor.fetch_add(1);
            if (idx >= tuples.size()) return;
            const auto& t = tuples[idx];
            try {
                SchubertInput in = validate(t[0], t[1], t[2], t[3]);
                per_tuple[idx] = input_checks(in);
            } catch (const std::exception& e) {
                per_tuple[idx] = {{"exception", false, e.what()}};
            }
        }
    };
    if (jobs == 1 || tuples.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (size_t idx = 0; idx < tuples.size(); ++idx) {
        const auto& t = tuples[idx];
        if (t[3] - t[1] < t[2]) ++result.non_small_tuples;
        for (const auto& check : per_tuple[idx]) {
            ++result.checks_run;
            if (!check.pass)
                result.failures.push_back({t[0], t[1], t[2], t[3], check.name, "fail", check.detail});
        }
    }
    return result;
}

std::string verify_summary(const VerifyOptions& opts, const VerifyResult& result) {
    std::ostringstream out;
    out << "verify: max-l " << opts.max_l << ", " << result.tuples << " inputs ("
        << result.non_small_tuples << " non-small, " << result.tuples - result.non_small_tuples
        << " all-small), " << result.checks_run << " checks, " << result.failures.size()
        << " failures\n";
    if (result.non_small_tuples == 0)
        out << "note: no non-small inputs exist with l <= " << opts.max_l << "\n";
    return out.str();
}

std::string failures_csv(const VerifyResult& result) {
    std::ostringstream out;
    out << "i,j,k,l,check,status,detail\n";
    for (const auto& row : result.failures) {
        std::string detail = row.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        std::replace(detail.begin(), detail.end(), '\n', ' ');
        out << row.i << ',' << row.j << ',' << row.k << ',' << row.l << ',' << row.check << ','
            << row.status << ',' << detail << "\n";
    }
    return out.str();
}

}  // namespace schubert

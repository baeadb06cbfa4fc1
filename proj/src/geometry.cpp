#include "schubert/geometry.hpp"

#include <sstream>

namespace schubert {

SchubertInput validate(int i, int j, int k, int l) {
    auto fail = [&](const std::string& what) {
        std::ostringstream msg;
        msg << "invalid input (i=" << i << ", j=" << j << ", k=" << k << ", l=" << l
            << "): " << what;
        throw validation_error(msg.str());
    };
    if (!(0 < i)) fail("0 < i violated");
    if (!(i < k)) fail("i < k violated");
    if (!(k <= j)) fail("k <= j violated");
    if (!(j < l)) fail("j < l violated");
    const int r = k - i;
    const int c = l - j;
    if (!(r < c)) {
        std::ostringstream what;
        what << "r < c violated (r = k-i = " << r << ", c = l-j = " << c << ")";
        fail(what.str());
    }
    SchubertInput in;
    in.i = i;
    in.j = j;
    in.k = k;
    in.l = l;
    in.r = r;
    in.c = c;
    in.regime = c < k ? Regime::non_small : Regime::all_small;
    return in;
}

StratumTable stratum_invariants(const SchubertInput& in) {
    StratumTable table;
    for (int p = 1; p <= in.strata(); ++p) {
        long long m = static_cast<long long>(in.k + 1 - p) * (in.j + p - in.k - 1) +
                      static_cast<long long>(p - 1) * (in.l - in.k);
        table.strata.push_back({p, in.i_p(p), m});
    }
    table.n = table.strata.back().m_p;
    return table;
}

const PairInvariants& PairTable::at(int p, int q) const {
    for (const auto& pair : pairs)
        if (pair.p == p && pair.q == q) return pair;
    throw std::out_of_range("pair (" + std::to_string(p) + "," + std::to_string(q) +
                            ") not in table");
}

PairTable pair_invariants(const SchubertInput& in) {
    PairTable table;
    for (int p = 2; p <= in.strata(); ++p) {
        for (int q = 1; q < p; ++q) {
            PairInvariants pi;
            pi.p = p;
            pi.q = q;
            pi.k_pq = static_cast<long long>(p - q) * (in.k + 1 - p);
            pi.d_pq = static_cast<long long>(p - q) * (in.c + 1 - q);
            pi.delta_pq = static_cast<long long>(p - q) * (in.k - in.c + q - p);
            pi.kbar_pq = static_cast<long long>(p - q) * (in.c - p + 1);
            table.pairs.push_back(pi);
        }
    }
    return table;
}

std::vector<ResolutionReport> resolution_smallness(const SchubertInput& in) {
    StratumTable strata = stratum_invariants(in);
    PairTable pairs = pair_invariants(in);
    std::vector<ResolutionReport> out;
    for (int p = 1; p <= in.strata(); ++p) {
        ResolutionReport rep{p, true, true, true};
        for (int q = 1; q < p; ++q) {
            const auto& pi = pairs.at(p, q);
            long long gap = strata.m(p) - strata.m(q);
            rep.xi_small = rep.xi_small && pi.kbar_pq < gap - pi.kbar_pq;
            rep.pi_small = rep.pi_small && pi.delta_pq < 0;
            rep.pi_semismall = rep.pi_semismall && pi.delta_pq <= 0;
        }
        out.push_back(rep);
    }
    return out;
}

namespace {

void check_stratum_index(const SchubertInput& in, int p) {
    if (p < 1 || p > in.strata())
        throw std::out_of_range("stratum index p=" + std::to_string(p) +
                                " outside 1.." + std::to_string(in.strata()));
}

}  // namespace

std::vector<FiberDescriptor> fiber_descriptors(const SchubertInput& in, int p) {
    check_stratum_index(in, p);
    return {{FiberKind::F_p, p, 0, in.i, in.i_p(p)}};
}

std::vector<FiberDescriptor> fiber_descriptors(const SchubertInput& in, int p, int q) {
    check_stratum_index(in, p);
    if (q < 1 || q >= p)
        throw std::out_of_range("pair index q=" + std::to_string(q) +
                                " outside 1.." + std::to_string(p - 1));
    auto out = fiber_descriptors(in, p);
    out.push_back({FiberKind::F_pq, p, q, in.i_p(p), in.i_p(q)});
    out.push_back({FiberKind::G_pq, p, q, p - q, in.c - q + 1});
    return out;
}

}  // namespace schubert

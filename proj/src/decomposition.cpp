#include "schubert/decomposition.hpp"

#include <algorithm>
#include <set>

namespace schubert {

namespace {

void check_pair(const SchubertInput& in, int p, int q) {
    if (p < 2 || p > in.strata() || q < 1 || q >= p)
        throw std::out_of_range("pair (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                ") outside 1 <= q < p <= " + std::to_string(in.strata()));
}

}  // namespace

SpaceBasis space_rectangle(SpaceKind kind, const SchubertInput& in, int p, int q) {
    check_pair(in, p, q);
    SpaceBasis basis;
    switch (kind) {
        case SpaceKind::A:
            basis.rect = {p - q, in.i_p(p)};
            break;
        case SpaceKind::B:
            basis.rect = {p - q, in.c - p + 1};
            break;
        case SpaceKind::D:
        case SpaceKind::E:
            basis.rect = {p - q, in.k - in.c + q - p};
            if (basis.rect.cols < 0) {
                basis.empty = true;
                basis.rect = {0, 0};
            } else if (kind == SpaceKind::E) {
                basis.part_shift = in.c + 1 - q;
            }
            break;
    }
    return basis;
}

LaurentPoly space_poincare(SpaceKind kind, const SchubertInput& in, int p, int q) {
    check_pair(in, p, q);
    switch (kind) {
        case SpaceKind::A:
            return grassmannian_poincare(p - q, in.i_p(q));
        case SpaceKind::B:
            return grassmannian_poincare(p - q, in.c - q + 1);
        case SpaceKind::D:
            return grassmannian_poincare(p - q, in.k - in.c);
        case SpaceKind::E: {
            long long d_pq = static_cast<long long>(p - q) * (in.c + 1 - q);
            return grassmannian_poincare(p - q, in.k - in.c).shifted(2 * static_cast<int>(d_pq));
        }
    }
    return LaurentPoly();
}

LaurentPoly h_poly(const SchubertInput& in, int p) {
    if (p < 1 || p > in.strata())
        throw std::out_of_range("h_poly: stratum p=" + std::to_string(p));
    return grassmannian_poincare(in.i_p(p), in.j) *
           grassmannian_poincare(p - 1, in.l - in.i_p(p));
}

IHTable ih_recursion(const SchubertInput& in) {
    IHTable table;
    PairTable pairs = pair_invariants(in);
    for (int p = 1; p <= in.strata(); ++p) {
        table.H.push_back(h_poly(in, p));
        LaurentPoly acc = table.H.back();
        for (int q = 1; q < p; ++q) {
            const auto& pi = pairs.at(p, q);
            LaurentPoly fpq = grassmannian_poincare(p - q, in.k - in.c);
            LaurentPoly gpq = fpq.shifted(2 * static_cast<int>(pi.d_pq));
            LaurentPoly Ppq = gpq * table.ih(q);
            acc -= Ppq;
            table.f.emplace(std::make_pair(p, q), std::move(fpq));
            table.g.emplace(std::make_pair(p, q), std::move(gpq));
            table.P.emplace(std::make_pair(p, q), std::move(Ppq));
        }
        table.I.push_back(std::move(acc));
    }
    return table;
}

IHTable ih_matrix(const SchubertInput& in) {
    const int n = in.strata();
    IHTable table;
    PairTable pairs = pair_invariants(in);
    for (int p = 1; p <= n; ++p) table.H.push_back(h_poly(in, p));
    for (int p = 2; p <= n; ++p) {
        for (int q = 1; q < p; ++q) {
            const auto& pi = pairs.at(p, q);
            LaurentPoly fpq = grassmannian_poincare(p - q, in.k - in.c);
            table.g.emplace(std::make_pair(p, q), fpq.shifted(2 * static_cast<int>(pi.d_pq)));
            table.f.emplace(std::make_pair(p, q), std::move(fpq));
        }
    }
    // I = sum_{step=0..r} (-1)^step N^step H, N strictly triangular in g_pq
    std::vector<LaurentPoly> total = table.H;
    std::vector<LaurentPoly> power = table.H;
    int sign = 1;
    for (int step = 1; step <= in.r; ++step) {
        std::vector<LaurentPoly> next(static_cast<size_t>(n));
        for (int p = 2; p <= n; ++p)
            for (int q = 1; q < p; ++q)
                next[static_cast<size_t>(p - 1)] +=
                    table.g.at({p, q}) * power[static_cast<size_t>(q - 1)];
        power = std::move(next);
        sign = -sign;
        for (int p = 1; p <= n; ++p) {
            if (sign > 0)
                total[static_cast<size_t>(p - 1)] += power[static_cast<size_t>(p - 1)];
            else
                total[static_cast<size_t>(p - 1)] -= power[static_cast<size_t>(p - 1)];
        }
    }
    table.I = std::move(total);
    for (int p = 2; p <= n; ++p)
        for (int q = 1; q < p; ++q)
            table.P.emplace(std::make_pair(p, q), table.g.at({p, q}) * table.ih(q));
    return table;
}

LaurentPoly small_resolution_oracle(const SchubertInput& in, int p) {
    if (p < 1 || p > in.strata())
        throw std::out_of_range("small_resolution_oracle: stratum p=" + std::to_string(p));
    for (const auto& rep : resolution_smallness(in)) {
        if (rep.p == p && !rep.xi_small)
            throw smallness_error("small resolution of stratum " + std::to_string(p) +
                                  " is not small for this input (k < c)");
    }
    return grassmannian_poincare(p - 1, in.c) *
           grassmannian_poincare(in.k, in.k + in.j - in.i_p(p));
}

LaurentPoly stalk_table(const SchubertInput& in, int p, int q) {
    check_pair(in, p, q);
    return grassmannian_poincare(p - q, in.c - q + 1);
}

SummandTable summand_table(const SchubertInput& in, int p) {
    if (p < 1 || p > in.strata())
        throw std::out_of_range("summand_table: stratum p=" + std::to_string(p));
    SummandTable table;
    table.p = p;
    for (int q = p - 1; q >= 1; --q) {
        SummandEntry entry;
        entry.q = q;
        SpaceBasis d = space_rectangle(SpaceKind::D, in, p, q);
        if (!d.empty) {
            long long delta = static_cast<long long>(p - q) * (in.k - in.c + q - p);
            auto buckets = enumerate_by_weight(d.rect);
            for (long long i = -delta; i <= delta; ++i) {
                if ((delta + i) % 2 != 0) continue;
                size_t w = static_cast<size_t>((delta + i) / 2);
                if (w >= buckets.size()) continue;
                long long mult = static_cast<long long>(buckets[w].size());
                if (mult) entry.mults.emplace(static_cast<int>(i), mult);
            }
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

PerverseTable perverse_table(const SchubertInput& in) {
    PerverseTable table;
    table[0].push_back({true, 0, 1});
    for (const auto& entry : summand_table(in, in.strata()).entries)
        for (const auto& [shift, mult] : entry.mults)
            table[shift].push_back({false, entry.q, mult});
    // within each shift: IC of the whole variety first, then q ascending
    for (auto& [shift, list] : table)
        std::sort(list.begin(), list.end(), [](const PerverseEntry& a, const PerverseEntry& b) {
            if (a.ic_top != b.ic_top) return a.ic_top;
            return a.q < b.q;
        });
    return table;
}

bool in_gysin_image(const Partition& nu, const SchubertInput& in, int p, int q) {
    check_pair(in, p, q);
    SpaceBasis a = space_rectangle(SpaceKind::A, in, p, q);
    if (!contains(a.rect, nu))
        throw std::invalid_argument("in_gysin_image: partition outside the A_pq rectangle");
    const int threshold = in.c + 1 - q;
    for (int idx = 0; idx < p - q; ++idx)
        if (nu[idx] < threshold) return false;
    return true;
}

LocalDecomposition local_decomposition(const SchubertInput& in, int p, int l) {
    if (l < 1 || l >= p || p > in.strata())
        throw std::out_of_range("local_decomposition: need 1 <= l < p <= r+1");
    LocalDecomposition out;
    out.p = p;
    out.l = l;
    out.small_resolution_regime = in.c <= in.k;

    Rectangle a_rect{p - l, in.i_p(p)};
    for (const auto& bucket : enumerate_by_weight(a_rect))
        for (const auto& nu : bucket)
            out.classes[classify_stratum(nu, p, l, in.c)].push_back(nu);

    // every class q < p is the bijective image of D_pq x B_ql under the
    // Gysin concatenation
    out.gysin_bijection = true;
    for (int q = l; q < p; ++q) {
        SpaceBasis d = space_rectangle(SpaceKind::D, in, p, q);
        std::vector<Partition> d_basis;
        if (!d.empty)
            for (const auto& bucket : enumerate_by_weight(d.rect))
                for (const auto& mu : bucket) d_basis.push_back(mu);
        std::vector<Partition> b_basis;
        if (q == l) {
            b_basis.push_back(Partition());
        } else {
            Rectangle b_rect{q - l, in.c - q + 1};
            for (const auto& bucket : enumerate_by_weight(b_rect))
                for (const auto& lam : bucket) b_basis.push_back(lam);
        }
        std::set<Partition, PartitionOrder> image;
        bool landed = true;
        for (const auto& mu : d_basis) {
            for (const auto& lam : b_basis) {
                Partition nu = gysin_compose(mu, lam, p - q, in.c + 1 - q);
                landed = landed && classify_stratum(nu, p, l, in.c) == q;
                image.insert(nu);
            }
        }
        size_t expected = d_basis.size() * b_basis.size();
        std::vector<Partition> members;
        auto it = out.classes.find(q);
        if (it != out.classes.end()) members = it->second;
        std::set<Partition, PartitionOrder> member_set(members.begin(), members.end());
        out.gysin_bijection =
            out.gysin_bijection && landed && image.size() == expected && image == member_set;
    }

    // class-p members coincide with the B_pl basis
    Rectangle b_pl{p - l, in.c - p + 1};
    std::set<Partition, PartitionOrder> b_set;
    if (b_pl.cols >= 0)
        for (const auto& bucket : enumerate_by_weight(b_pl))
            for (const auto& lam : bucket) b_set.insert(lam);
    std::set<Partition, PartitionOrder> class_p;
    if (auto it = out.classes.find(p); it != out.classes.end())
        class_p.insert(it->second.begin(), it->second.end());
    out.cokernel_is_b_basis = class_p == b_set;

    // graded count identity, with d_pp = 0, f_pp = 1 and a trivial B_ll
    LaurentPoly lhs = grassmannian_poincare(p - l, in.i_p(l));
    LaurentPoly rhs;
    for (int q = l; q <= p; ++q) {
        long long d_pq = q == p ? 0 : static_cast<long long>(p - q) * (in.c + 1 - q);
        LaurentPoly fpq = q == p ? LaurentPoly::constant(1)
                                 : grassmannian_poincare(p - q, in.k - in.c);
        LaurentPoly bql = q == l ? LaurentPoly::constant(1)
                                 : grassmannian_poincare(q - l, in.c - l + 1);
        rhs += (fpq * bql).shifted(2 * static_cast<int>(d_pq));
    }
    out.count_identity = lhs == rhs;
    return out;
}

bool hard_lefschetz_verify(const SchubertInput& in, int p, int q) {
    check_pair(in, p, q);
    long long delta = static_cast<long long>(p - q) * (in.k - in.c + q - p);
    if (delta < 0)
        throw std::invalid_argument("hard_lefschetz_verify: delta_pq < 0");
    RingSpec ring{p - q, in.k - in.c + q - p};
    for (long long i = 0; i <= delta; ++i) {
        IntMatrix m = lefschetz_power_matrix(ring, static_cast<int>(i));
        if (m.empty()) continue;  // parity mismatch, nothing to map
        if (m.size() != m[0].size()) return false;
        if (matrix_rank_exact(m) != static_cast<int>(m.size())) return false;
    }
    return true;
}

}  // namespace schubert

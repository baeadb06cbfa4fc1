#include "schubert/oracle.hpp"

#include <algorithm>

namespace schubert {

MonomialVector schur_monomial_expand(const Partition& lam, int nvars) {
    return schur_monomial_expand(lam, nvars, enumeration_limit());
}

MonomialVector schur_monomial_expand(const Partition& lam, int nvars, long limit) {
    if (nvars < 0) throw std::invalid_argument("schur_monomial_expand: negative nvars");
    if (lam.length() > nvars)
        throw std::invalid_argument("schur_monomial_expand: more parts than variables");
    if (static_cast<long>(nvars) * lam.weight() > limit)
        throw enum_limit_error("schur_monomial_expand: enumeration limit exceeded");

    MonomialVector out;
    if (lam.empty()) {
        out.emplace(Monomial(static_cast<size_t>(nvars), 0), Int(1));
        return out;
    }
    const int nrows = lam.length();
    std::vector<std::vector<int>> tab(static_cast<size_t>(nrows));
    for (int r = 0; r < nrows; ++r) tab[static_cast<size_t>(r)].assign(static_cast<size_t>(lam[r]), 0);
    Monomial content(static_cast<size_t>(nvars), 0);

    // rows weakly increase, columns strictly increase, entries in 1..nvars
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == nrows) {
            auto [it, inserted] = out.emplace(content, Int(1));
            if (!inserted) it->second += 1;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lam[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0 && c < lam[r - 1]) lo = std::max(lo, tab[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            tab[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            content[static_cast<size_t>(v - 1)]++;
            self(self, nr, nc);
            content[static_cast<size_t>(v - 1)]--;
        }
        tab[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

MonomialVector monomial_mul(const MonomialVector& a, const MonomialVector& b) {
    MonomialVector out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Monomial e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

bool brute_product_check(RingSpec spec, const Partition& lam, const Partition& mu) {
    const int nvars = spec.rows;
    MonomialVector lhs =
        monomial_mul(schur_monomial_expand(lam, nvars), schur_monomial_expand(mu, nvars));

    auto full = lr_expand(lam, mu, nvars);
    MonomialVector rhs;
    for (const auto& [nu, c] : full) {
        for (const auto& [e, cc] : schur_monomial_expand(nu, nvars)) {
            auto [it, inserted] = rhs.emplace(e, cc * c);
            if (!inserted) {
                it->second += cc * c;
                if (it->second == 0) rhs.erase(it);
            }
        }
    }
    if (lhs != rhs) return false;

    SchurVector kept = lr_multiply(SchurVector::basis_element(spec, lam),
                                   SchurVector::basis_element(spec, mu));
    for (const auto& [nu, c] : full) {
        bool truncated = kept.coeff(nu) == 0;
        if (truncated && nu[0] <= spec.cols) return false;
        if (!truncated && kept.coeff(nu) != c) return false;
    }
    return true;
}

LaurentPoly gaussian_by_enumeration(int a, int b) {
    if (a < 0 || a > b) return LaurentPoly();
    LaurentPoly out;
    auto buckets = enumerate_by_weight({a, b - a});
    for (size_t w = 0; w < buckets.size(); ++w)
        out += LaurentPoly::monomial(2 * static_cast<int>(w),
                                     Int(static_cast<long long>(buckets[w].size())));
    return out;
}

}  // namespace schubert

#include "schubert/schur.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

namespace {

void require_in_rect(RingSpec spec, const Partition& p, const char* who) {
    if (!contains(spec.rect(), p))
        throw std::invalid_argument(std::string(who) + ": partition (" + to_text(p) +
                                    ") outside the " + std::to_string(spec.rows) + "x" +
                                    std::to_string(spec.cols) + " rectangle");
}

}  // namespace

SchurVector SchurVector::basis_element(RingSpec spec, const Partition& p) {
    require_in_rect(spec, p, "basis_element");
    SchurVector v(spec);
    v.add_term(p, 1);
    return v;
}

Int SchurVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchurVector::add_term(const Partition& p, const Int& c) {
    if (c == 0) return;
    require_in_rect(spec_, p, "add_term");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string SchurVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag << "*";
        out << "σ_(" << to_text(p) << ")";
    }
    return out.str();
}

SchurVector pieri_row(RingSpec spec, const Partition& lam, int m) {
    require_in_rect(spec, lam, "pieri_row");
    if (m < 0) throw std::invalid_argument("pieri_row: negative strip size");
    SchurVector out(spec);
    std::vector<int> nu(static_cast<size_t>(spec.rows), 0);
    // nu_i in [lam_i, min(cols, lam_{i-1})], total added boxes = m.
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (row == spec.rows) {
            if (rem == 0) out.add_term(Partition(nu), 1);
            return;
        }
        int lo = lam[row];
        int hi = std::min(spec.cols, lam[row] + rem);
        if (row > 0) hi = std::min(hi, lam[row - 1]);
        for (int v = lo; v <= hi; ++v) {
            nu[static_cast<size_t>(row)] = v;
            self(self, row + 1, rem - (v - lam[row]));
        }
        nu[static_cast<size_t>(row)] = 0;
    };
    if (spec.rows == 0) {
        if (m == 0) out.add_term(Partition(), 1);
        return out;
    }
    rec(rec, 0, m);
    return out;
}

SchurVector pieri_column(RingSpec spec, const Partition& lam, int m) {
    require_in_rect(spec, lam, "pieri_column");
    if (m < 0 || m > spec.rows)
        throw std::invalid_argument("pieri_column: strip size must be in [0, rows]");
    SchurVector out(spec);
    std::vector<int> nu(static_cast<size_t>(spec.rows), 0);
    // At most one box per row, nu stays weakly decreasing inside the rectangle.
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (row == spec.rows) {
            if (rem == 0) out.add_term(Partition(nu), 1);
            return;
        }
        for (int add = 0; add <= std::min(1, rem); ++add) {
            int v = lam[row] + add;
            if (v > spec.cols) continue;
            if (row > 0 && v > nu[static_cast<size_t>(row - 1)]) continue;
            nu[static_cast<size_t>(row)] = v;
            self(self, row + 1, rem - add);
        }
        nu[static_cast<size_t>(row)] = 0;
    };
    if (spec.rows == 0) {
        if (m == 0) out.add_term(Partition(), 1);
        return out;
    }
    rec(rec, 0, m);
    return out;
}

namespace {

// Number of LR skew tableaux of shape nu/lam and content mu: rows weakly
// increasing, columns strictly increasing, reverse reading word a lattice word.
long long lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
    const int nrows = nu.length();
    const int values = mu.length();
    // cells of nu/lam in reverse reading order: top row first, right to left
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nrows; ++r) {
        if (nu[r] < lam[r]) return 0;  // lam not contained in nu
        for (int c = nu[r] - 1; c >= lam[r]; --c) cells.push_back({r, c});
    }
    if (cells.empty()) return mu.empty() ? 1 : 0;
    if (values == 0) return 0;

    std::vector<std::vector<int>> fill(static_cast<size_t>(nrows));
    for (int r = 0; r < nrows; ++r) fill[static_cast<size_t>(r)].assign(static_cast<size_t>(nu[r]), 0);
    std::vector<int> used(static_cast<size_t>(values) + 1, 0);

    long long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int above = (r > 0 && c < lam[r - 1]) ? 0 : (r > 0 ? fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] : 0);
        int right = (c + 1 < nu[r]) ? fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] : values;
        for (int v = above + 1; v <= right; ++v) {
            if (used[static_cast<size_t>(v)] >= mu[v - 1]) continue;
            if (v > 1 && used[static_cast<size_t>(v)] + 1 > used[static_cast<size_t>(v - 1)]) continue;  // lattice
            used[static_cast<size_t>(v)]++;
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            self(self, idx + 1);
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            used[static_cast<size_t>(v)]--;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

std::map<Partition, Int, PartitionOrder> lr_expand(const Partition& lam,
                                                   const Partition& mu, int max_rows) {
    std::map<Partition, Int, PartitionOrder> out;
    const int total = lam.weight() + mu.weight();
    const int maxcol = lam[0] + mu[0];
    // candidates: partitions nu of weight |lam|+|mu| with nu >= lam rowwise
    std::vector<int> nu;
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (rem == 0) {
            Partition cand(nu);
            bool covers = cand.length() >= lam.length();
            for (int i = 0; covers && i < cand.length(); ++i) covers = cand[i] >= lam[i];
            if (covers) {
                long long c = lr_coefficient(cand, lam, mu);
                if (c) out.emplace(cand, Int(c));
            }
            return;
        }
        if (row == max_rows) return;
        int hi = row == 0 ? maxcol : nu[static_cast<size_t>(row - 1)];
        hi = std::min(hi, rem);
        for (int v = std::max(1, lam[row]); v <= hi; ++v) {
            nu.push_back(v);
            self(self, row + 1, rem - v);
            nu.pop_back();
        }
    };
    if (total == 0) {
        out.emplace(Partition(), Int(1));
        return out;
    }
    rec(rec, 0, total);
    return out;
}

SchurVector lr_multiply(const SchurVector& u, const SchurVector& v) {
    if (!(u.spec() == v.spec()))
        throw std::invalid_argument("lr_multiply: ring spec mismatch");
    const RingSpec spec = u.spec();
    SchurVector out(spec);
    for (const auto& [lam, cu] : u.terms()) {
        for (const auto& [mu, cv] : v.terms()) {
            for (const auto& [nu, c] : lr_expand(lam, mu, spec.rows)) {
                if (nu[0] > spec.cols) continue;  // quotient-ring truncation
                out.add_term(nu, c * cu * cv);
            }
        }
    }
    return out;
}

SchurVector multiply_by_full_rectangle(RingSpec spec, const Partition& lam, int a) {
    require_in_rect(spec, lam, "multiply_by_full_rectangle");
    if (a < 0) throw std::invalid_argument("multiply_by_full_rectangle: negative power");
    SchurVector out(spec);
    if (lam[0] + a <= spec.cols) out.add_term(add_to_parts(lam, spec.rows, a), 1);
    return out;
}

IntMatrix lefschetz_power_matrix(RingSpec spec, int i) {
    if (i < 0) throw std::invalid_argument("lefschetz_power_matrix: negative power");
    const long boxes = static_cast<long>(spec.rows) * spec.cols;
    if ((boxes - i) % 2 != 0 || boxes - i < 0) return {};
    const long wlo = (boxes - i) / 2;
    const long whi = (boxes + i) / 2;
    auto buckets = enumerate_by_weight(spec.rect());
    const auto& src = buckets[static_cast<size_t>(wlo)];
    const auto& dst = buckets[static_cast<size_t>(whi)];

    std::map<Partition, size_t, PartitionOrder> dst_index;
    for (size_t r = 0; r < dst.size(); ++r) dst_index.emplace(dst[r], r);

    IntMatrix m(dst.size(), std::vector<Int>(src.size(), Int(0)));
    for (size_t col = 0; col < src.size(); ++col) {
        SchurVector v = SchurVector::basis_element(spec, src[col]);
        for (int step = 0; step < i; ++step) {
            SchurVector next(spec);
            for (const auto& [p, c] : v.terms()) {
                SchurVector strip = pieri_row(spec, p, 1);
                for (const auto& [q, one] : strip.terms()) next.add_term(q, c * one);
            }
            v = std::move(next);
        }
        for (const auto& [p, c] : v.terms()) m[dst_index.at(p)][col] = c;
    }
    return m;
}

int matrix_rank_exact(IntMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const size_t nrows = m.size();
    const size_t ncols = m[0].size();
    size_t row = 0;
    Int prev = 1;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t pivot = row;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < nrows; ++r) {
            for (size_t c = col + 1; c < ncols; ++c)
                m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace schubert

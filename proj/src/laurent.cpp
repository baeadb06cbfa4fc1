#include "schubert/laurent.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <sstream>
#include <tuple>

namespace schubert {

LaurentPoly LaurentPoly::constant(Int value) { return monomial(0, std::move(value)); }

LaurentPoly LaurentPoly::monomial(int exp, Int coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto it = coeff_.find(exp);
    if (it == coeff_.end()) {
        coeff_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

Int LaurentPoly::coeff(int exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
int LaurentPoly::max_exp() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

Int LaurentPoly::at_one() const {
    Int total = 0;
    for (const auto& [e, c] : coeff_) total += c;
    return total;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeff_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeff_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeff_)
        for (const auto& [eb, cb] : b.coeff_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeff_) out.coeff_.emplace(e + s, c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Int& n) const {
    LaurentPoly out;
    if (n == 0) return out;
    for (const auto& [e, c] : coeff_) out.coeff_.emplace(e, c * n);
    return out;
}

std::string LaurentPoly::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "t^" << e;
        }
    }
    return out.str();
}

bool is_palindromic(const LaurentPoly& p, int center) {
    for (const auto& [e, c] : p.terms())
        if (p.coeff(2 * center - e) != c) return false;
    return true;
}

namespace {

bool gaussian_fault_injected() {
    const char* env = std::getenv("SCHUBERT_FAULT_INJECT");
    return env && std::strcmp(env, "gaussian") == 0;
}

}  // namespace

LaurentPoly gaussian_binomial(int n, int k, int step) {
    if (step <= 0) throw std::invalid_argument("gaussian_binomial: step must be positive");
    if (k < 0 || k > n) return LaurentPoly();

    static std::map<std::tuple<int, int, int>, LaurentPoly> memo;
    static std::mutex memo_mutex;

    auto compute = [&](auto&& self, int nn, int kk) -> LaurentPoly {
        if (kk < 0 || kk > nn) return LaurentPoly();
        if (kk == 0 || kk == nn) return LaurentPoly::constant(1);
        {
            std::lock_guard<std::mutex> lock(memo_mutex);
            auto it = memo.find({nn, kk, step});
            if (it != memo.end()) return it->second;
        }
        LaurentPoly value =
            self(self, nn - 1, kk - 1) + self(self, nn - 1, kk).shifted(step * kk);
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(std::make_tuple(nn, kk, step), value);
        return value;
    };
    LaurentPoly result = compute(compute, n, k);
    // Test hook: SCHUBERT_FAULT_INJECT=gaussian perturbs one coefficient so the
    // verify sweep can demonstrate that a broken kernel is caught.
    if (gaussian_fault_injected() && n >= 2 && k >= 1 && k < n)
        result += LaurentPoly::monomial(step, 1);
    return result;
}

LaurentPoly grassmannian_poincare(int a, int b) { return gaussian_binomial(b, a, 2); }

Int binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (int idx = 1; idx <= k; ++idx) {
        out *= n - k + idx;
        out /= idx;
    }
    return out;
}

}  // namespace schubert

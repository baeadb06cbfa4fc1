#pragma once

// Exact Laurent polynomials in t over arbitrary-precision integers, and the
// Gaussian binomials that carry every Poincare polynomial in this library.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace schubert {

using Int = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Int value);
    static LaurentPoly monomial(int exp, Int coeff = 1);

    bool is_zero() const { return coeff_.empty(); }
    Int coeff(int exp) const;
    int min_exp() const;  // 0 for the zero polynomial
    int max_exp() const;
    Int at_one() const;   // sum of coefficients
    const std::map<int, Int>& terms() const { return coeff_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const LaurentPoly& o) const { return coeff_ != o.coeff_; }

    LaurentPoly shifted(int s) const;       // multiply by t^s
    LaurentPoly scaled(const Int& n) const;

    std::string str() const;  // "1 + 2*t^2 + t^4"; "0" for zero

private:
    std::map<int, Int> coeff_;  // exponent -> nonzero coefficient

    void add_term(int exp, const Int& c);
};

bool is_palindromic(const LaurentPoly& p, int center);

// q-binomial [n k] in q = t^step, by the Pascal recurrence (memoized).
// Zero when k < 0 or k > n.
LaurentPoly gaussian_binomial(int n, int k, int step = 2);

// Poincare polynomial of Gr_a(C^b): gaussian_binomial(b, a, 2).
LaurentPoly grassmannian_poincare(int a, int b);

Int binomial_coefficient(int n, int k);

}  // namespace schubert

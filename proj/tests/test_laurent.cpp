#include "schubert/laurent.hpp"

#include "schubert/oracle.hpp"
#include "testutil.hpp"

using namespace schubert;

namespace {

LaurentPoly from_even_coeffs(const std::vector<long long>& coeffs) {
    LaurentPoly out;
    for (size_t d = 0; d < coeffs.size(); ++d)
        out += LaurentPoly::monomial(2 * static_cast<int>(d), Int(coeffs[d]));
    return out;
}

}  // namespace

int main() {
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly t2 = LaurentPoly::monomial(2);

    // ring operations
    CHECK((one + t2) * (one + t2) == from_even_coeffs({1, 2, 1}));
    CHECK((one + t2).shifted(-2) == LaurentPoly::monomial(-2) + one);
    LaurentPoly p = from_even_coeffs({1, 3, 2});
    CHECK((p - p).is_zero());
    CHECK(p.scaled(0).is_zero());
    CHECK(p.scaled(-2).coeff(2) == -6);
    CHECK(p.at_one() == 6);
    CHECK(p.min_exp() == 0 && p.max_exp() == 4);
    CHECK(LaurentPoly().str() == "0");
    CHECK(from_even_coeffs({1, 2, 1}).str() == "1 + 2*t^2 + t^4");
    CHECK((one + t2).shifted(-2).str() == "t^-2 + 1");
    CHECK((LaurentPoly::monomial(2, -1) + one).str() == "1 - t^2");

    // gaussian binomials, frozen from the enumeration oracle
    CHECK(gaussian_binomial(2, 1, 2) == from_even_coeffs({1, 1}));
    CHECK(gaussian_binomial(4, 2, 2) == from_even_coeffs({1, 1, 2, 1, 1}));
    CHECK(gaussian_binomial(1, 2, 2).is_zero());
    CHECK(gaussian_binomial(5, 0, 2) == one);
    CHECK(gaussian_binomial(5, 5, 2) == one);
    CHECK(gaussian_binomial(-1, 0, 2).is_zero());
    CHECK(gaussian_binomial(2, 1, 1) == one + LaurentPoly::monomial(1));
    CHECK_THROWS(gaussian_binomial(2, 1, 0), std::invalid_argument);

    CHECK(grassmannian_poincare(4, 5) == from_even_coeffs({1, 1, 1, 1, 1}));
    CHECK(grassmannian_poincare(2, 6) == from_even_coeffs({1, 1, 2, 2, 3, 2, 2, 1, 1}));
    CHECK(grassmannian_poincare(0, 7) == one);
    CHECK(grassmannian_poincare(3, 3) == one);
    CHECK(grassmannian_poincare(4, 3).is_zero());

    // palindromy
    CHECK(is_palindromic(from_even_coeffs({1, 1, 1}), 2));
    CHECK(!is_palindromic(from_even_coeffs({1, 2}), 1));
    CHECK(is_palindromic(grassmannian_poincare(2, 6), 8));
    CHECK(is_palindromic(LaurentPoly(), 37));

    // Pascal recurrence, evaluation, palindromy and the enumeration oracle
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            LaurentPoly value = gaussian_binomial(n, k, 2);
            if (n >= 1)
                CHECK(value == gaussian_binomial(n - 1, k - 1, 2) +
                                   gaussian_binomial(n - 1, k, 2).shifted(2 * k));
            CHECK(value.at_one() == binomial_coefficient(n, k));
            CHECK(is_palindromic(value, k * (n - k)));
            if (n <= 10) CHECK(value == gaussian_by_enumeration(k, n));
        }
    }

    CHECK(binomial_coefficient(5, 2) == 10);
    CHECK(binomial_coefficient(0, 0) == 1);
    CHECK(binomial_coefficient(3, 5) == 0);
    CHECK(binomial_coefficient(40, 20) == Int("137846528820"));

    return testutil::finish("test_laurent");
}

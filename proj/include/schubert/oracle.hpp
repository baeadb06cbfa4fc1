#pragma once

// Brute-force cross-checks for the Schur and Gaussian kernels. These stay on
// separate code paths from the operations they validate: Schur polynomials by
// semistandard-tableau enumeration, Gaussian binomials by rectangle listing.

#include "schubert/laurent.hpp"
#include "schubert/partition.hpp"
#include "schubert/schur.hpp"

#include <map>
#include <vector>

namespace schubert {

using Monomial = std::vector<int>;  // one exponent per variable
using MonomialVector = std::map<Monomial, Int>;

// s_lam(x_1..x_nvars) via semistandard Young tableaux with entries 1..nvars.
MonomialVector schur_monomial_expand(const Partition& lam, int nvars);
MonomialVector schur_monomial_expand(const Partition& lam, int nvars, long limit);

MonomialVector monomial_mul(const MonomialVector& a, const MonomialVector& b);

// Checks s_lam*s_mu == sum c^nu s_nu in spec.rows variables, before the
// column truncation, and that every term the ring product drops has
// nu_1 > spec.cols.
bool brute_product_check(RingSpec spec, const Partition& lam, const Partition& mu);

// Sum of t^{2 weight} over the a x (b-a) rectangle.
LaurentPoly gaussian_by_enumeration(int a, int b);

}  // namespace schubert

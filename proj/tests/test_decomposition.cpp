#include "schubert/decomposition.hpp"

#include "schubert/oracle.hpp"
#include "schubert/verify.hpp"
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
    const SchubertInput in = validate(2, 5, 4, 8);

    // graded-space rectangles
    SpaceBasis d32 = space_rectangle(SpaceKind::D, in, 3, 2);
    CHECK(!d32.empty && d32.rect.rows == 1 && d32.rect.cols == 0);
    SpaceBasis d31 = space_rectangle(SpaceKind::D, in, 3, 1);
    CHECK(d31.empty);
    SpaceBasis b31 = space_rectangle(SpaceKind::B, in, 3, 1);
    CHECK(b31.rect.rows == 2 && b31.rect.cols == 1);
    SpaceBasis a31 = space_rectangle(SpaceKind::A, in, 3, 1);
    CHECK(a31.rect.rows == 2 && a31.rect.cols == 2);
    SpaceBasis e32 = space_rectangle(SpaceKind::E, in, 3, 2);
    CHECK(!e32.empty && e32.part_shift == 2 && e32.rect.rows == 1 && e32.rect.cols == 0);

    // graded-space Poincare polynomials
    CHECK(space_poincare(SpaceKind::D, in, 3, 2) == LaurentPoly::constant(1));   // f_32
    CHECK(space_poincare(SpaceKind::D, in, 3, 1).is_zero());                     // f_31
    CHECK(space_poincare(SpaceKind::B, in, 2, 1) == from_even_coeffs({1, 1, 1}));
    CHECK(space_poincare(SpaceKind::E, in, 3, 2) == LaurentPoly::monomial(4));   // t^{2 d_32}
    CHECK(space_poincare(SpaceKind::A, in, 3, 2) == from_even_coeffs({1, 1, 1}));

    // H polynomials
    CHECK(h_poly(in, 1) == from_even_coeffs({1, 1, 1, 1, 1}));
    CHECK(h_poly(in, 2) == from_even_coeffs({1, 2, 4, 6, 8, 8, 8, 6, 4, 2, 1}));
    CHECK(h_poly(in, 2).at_one() == 50);
    CHECK(h_poly(in, 3) ==
          from_even_coeffs({1, 2, 5, 8, 13, 16, 20, 20, 20, 16, 13, 8, 5, 2, 1}));

    // IH recursion on the worked instance
    IHTable table = ih_recursion(in);
    CHECK(table.ih(1) == from_even_coeffs({1, 1, 1, 1, 1}));
    CHECK(table.ih(2) == from_even_coeffs({1, 2, 4, 5, 7, 7, 7, 5, 4, 2, 1}));
    CHECK(table.ih(2).at_one() == 45);
    CHECK(table.ih(3) ==
          from_even_coeffs({1, 2, 4, 6, 9, 11, 13, 13, 13, 11, 9, 6, 4, 2, 1}));
    CHECK(table.ih(3).at_one() == 105);
    CHECK(table.f.at({2, 1}) == LaurentPoly::constant(1));
    CHECK(table.g.at({2, 1}) == LaurentPoly::monomial(6));
    CHECK(table.P.at({3, 2}) == table.ih(2).shifted(4));
    CHECK(table.h(2) == table.ih(2) + table.ih(1).shifted(6));  // H_2 = I_2 + t^6 I_1
    CHECK(table.h(3) == table.ih(3) + table.ih(2).shifted(4));  // H_3 = I_3 + t^4 I_2

    // matrix route agrees, here and on further instances
    IHTable mat = ih_matrix(in);
    for (int p = 1; p <= 3; ++p) CHECK(mat.ih(p) == table.ih(p));
    const SchubertInput in358 = validate(3, 5, 5, 8);
    IHTable rec358 = ih_recursion(in358);
    IHTable mat358 = ih_matrix(in358);
    for (int p = 1; p <= in358.strata(); ++p) CHECK(mat358.ih(p) == rec358.ih(p));
    // all-small input: the matrix is identically zero, so I = H at every stratum
    const SchubertInput tiny = validate(1, 2, 2, 4);
    IHTable mat_tiny = ih_matrix(tiny);
    for (int p = 1; p <= tiny.strata(); ++p) CHECK(mat_tiny.ih(p) == mat_tiny.h(p));

    // the N^2 chain for (2,5,4,8): g_32 * g_21 = t^10
    CHECK(table.g.at({3, 2}) * table.g.at({2, 1}) == LaurentPoly::monomial(10));

    // small-resolution route
    CHECK(small_resolution_oracle(in, 1) == from_even_coeffs({1, 1, 1, 1, 1}));
    CHECK(small_resolution_oracle(in, 2) == table.ih(2));
    CHECK(small_resolution_oracle(in, 3) == table.ih(3));
    CHECK(small_resolution_oracle(in, 3).at_one() == 105);  // C(3,2) * C(7,4)
    CHECK_THROWS(small_resolution_oracle(validate(1, 2, 2, 5), 2), smallness_error);
    // boundary c = k: the oracle applies and agrees
    const SchubertInput boundary = validate(1, 3, 3, 6);
    IHTable btable = ih_recursion(boundary);
    for (int p = 1; p <= boundary.strata(); ++p)
        CHECK(small_resolution_oracle(boundary, p) == btable.ih(p));

    // stalks
    CHECK(stalk_table(in, 3, 2) == from_even_coeffs({1, 1}));
    CHECK(stalk_table(in, 3, 1) == from_even_coeffs({1, 1, 1}));
    StratumTable strata = stratum_invariants(in);
    PairTable pairs = pair_invariants(in);
    for (const auto& pi : pairs.pairs) {
        CHECK(stalk_table(in, pi.p, pi.q).max_exp() == 2 * pi.kbar_pq);
        CHECK(2 * pi.kbar_pq < strata.m(pi.p) - strata.m(pi.q));
    }

    // summand tables
    SummandTable s3 = summand_table(in, 3);
    CHECK(s3.entries.size() == 2);
    CHECK(s3.entries[0].q == 2 && s3.entries[0].mults.size() == 1 &&
          s3.entries[0].mults.at(0) == 1);
    CHECK(s3.entries[1].q == 1 && s3.entries[1].mults.empty());  // delta_31 < 0
    SummandTable s2 = summand_table(in, 2);
    CHECK(s2.entries.size() == 1 && s2.entries[0].mults.at(0) == 1);

    // perverse tables
    PerverseTable perv358 = perverse_table(in358);
    CHECK(perv358.size() == 3);
    CHECK(perv358.at(-1).size() == 1 && !perv358.at(-1)[0].ic_top &&
          perv358.at(-1)[0].q == 2 && perv358.at(-1)[0].mult == 1);
    CHECK(perv358.at(0).size() == 2 && perv358.at(0)[0].ic_top &&
          perv358.at(0)[1].q == 1 && perv358.at(0)[1].mult == 1);
    CHECK(perv358.at(1).size() == 1 && perv358.at(1)[0].q == 2);
    PerverseTable perv = perverse_table(in);
    CHECK(perv.size() == 1 && perv.at(0).size() == 2 && perv.at(0)[0].ic_top &&
          perv.at(0)[1].q == 2);
    PerverseTable perv_tiny = perverse_table(tiny);
    CHECK(perv_tiny.size() == 1 && perv_tiny.at(0).size() == 1 && perv_tiny.at(0)[0].ic_top);

    // image of the Gysin cup product (threshold c+1-q = 2 at (p,q)=(3,2))
    CHECK(in_gysin_image(Partition({2}), in, 3, 2));
    CHECK(!in_gysin_image(Partition({1}), in, 3, 2));
    CHECK(!in_gysin_image(Partition(), in, 3, 2));
    CHECK_THROWS(in_gysin_image(Partition({3}), in, 3, 2), std::invalid_argument);

    // local decomposition at (p,l) = (3,1)
    LocalDecomposition dec = local_decomposition(in, 3, 1);
    CHECK(dec.ok() && dec.small_resolution_regime);
    CHECK(dec.classes.count(1) == 0);
    CHECK(dec.classes.at(2).size() == 3 && dec.classes.at(3).size() == 3);
    CHECK(dec.classes.at(2)[0] == Partition({2}) && dec.classes.at(2)[1] == Partition({2, 1}) &&
          dec.classes.at(2)[2] == Partition({2, 2}));
    CHECK(dec.classes.at(3)[0] == Partition() && dec.classes.at(3)[2] == Partition({1, 1}));
    // the count identity at (3,1): B_31 plus the class-2 block shifted by t^{2 d_32}
    CHECK(grassmannian_poincare(2, 4) ==
          from_even_coeffs({1, 1, 1}) + from_even_coeffs({1, 1, 1}).shifted(4));
    // the class-2 member (2,1) decomposes through the empty head
    CHECK(gysin_compose(Partition(), Partition({1}), 1, 2) == Partition({2, 1}));
    // k < c input: classifier still total, identities flagged out of scope
    LocalDecomposition dec_small = local_decomposition(validate(1, 2, 2, 5), 2, 1);
    CHECK(!dec_small.small_resolution_regime && dec_small.gysin_bijection && dec_small.ok());
    CHECK(!dec_small.cokernel_is_b_basis);  // B_21 does not fit inside A_21 when k < c

    // Hard Lefschetz wrappers
    CHECK(hard_lefschetz_verify(in, 3, 2));       // delta = 0
    CHECK(hard_lefschetz_verify(in358, 2, 1));    // delta = 1, 1x1 ring
    CHECK(hard_lefschetz_verify(in358, 3, 2));
    CHECK_THROWS(hard_lefschetz_verify(in, 3, 1), std::invalid_argument);  // delta < 0

    // scoped triple-equality sweep, l <= 8
    for (const auto& t : valid_tuples(8)) {
        SchubertInput sweep_in = validate(t[0], t[1], t[2], t[3]);
        IHTable sweep_rec = ih_recursion(sweep_in);
        IHTable sweep_mat = ih_matrix(sweep_in);
        StratumTable sweep_strata = stratum_invariants(sweep_in);
        auto smallness = resolution_smallness(sweep_in);
        for (int p = 1; p <= sweep_in.strata(); ++p) {
            CHECK(sweep_rec.ih(p) == sweep_mat.ih(p));
            if (smallness[static_cast<size_t>(p - 1)].xi_small)
                CHECK(sweep_rec.ih(p) == small_resolution_oracle(sweep_in, p));
            else
                CHECK(sweep_rec.ih(p) == sweep_rec.h(p));
            CHECK(is_palindromic(sweep_rec.ih(p), static_cast<int>(sweep_strata.m(p))));
        }
    }

    return testutil::finish("test_decomposition");
}

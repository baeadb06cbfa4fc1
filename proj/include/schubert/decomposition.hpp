#pragma once

// The decomposition data of the non-small resolution, as computable tables:
// graded spaces A/B/D/E on Schur bases, the IH Poincare recursion and its
// matrix form, the small-resolution cross-check, summand and perverse
// multiplicity tables, IC stalks, the stratum classifier on A-bases, and
// exact Hard Lefschetz verification on the D-rings.

#include "schubert/geometry.hpp"
#include "schubert/laurent.hpp"
#include "schubert/partition.hpp"
#include "schubert/schur.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

enum class SpaceKind { A, B, D, E };

// Basis description of one graded space. The basis is the set of partitions
// in `rect`, each raised by `part_shift` on all rect.rows parts (nonzero only
// for E, whose basis is the D basis pushed up by c+1-q).
struct SpaceBasis {
    bool empty = false;  // true iff the space is zero in every degree
    Rectangle rect{};
    int part_shift = 0;
};

SpaceBasis space_rectangle(SpaceKind kind, const SchubertInput& in, int p, int q);
LaurentPoly space_poincare(SpaceKind kind, const SchubertInput& in, int p, int q);

// Poincare polynomial of the resolution of the p-th stratum: a Grassmannian
// bundle with base Gr_{i_p}(C^j) and fiber Gr_{p-1}(C^{l-i_p}).
LaurentPoly h_poly(const SchubertInput& in, int p);

struct IHTable {
    std::vector<LaurentPoly> I;  // index p-1, p = 1..r+1
    std::vector<LaurentPoly> H;
    std::map<std::pair<int, int>, LaurentPoly> f;  // f_pq
    std::map<std::pair<int, int>, LaurentPoly> g;  // t^{2 d_pq} f_pq
    std::map<std::pair<int, int>, LaurentPoly> P;  // g_pq * I_q

    const LaurentPoly& ih(int p) const { return I.at(static_cast<size_t>(p - 1)); }
    const LaurentPoly& h(int p) const { return H.at(static_cast<size_t>(p - 1)); }
};

// I_1 = H_1; I_p = H_p - sum_{q<p} t^{2 d_pq} f_pq I_q.
IHTable ih_recursion(const SchubertInput& in);

// Same table through the nilpotent-matrix inverse sum_k (-1)^k N^k H.
IHTable ih_matrix(const SchubertInput& in);

class smallness_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// H of the small-resolution total space of the p-th stratum, the independent
// route to I_p: Gr_{p-1}(C^c) times Gr_k(C^{k+j-i_p}). Throws smallness_error
// unless that resolution is small (it is whenever c <= k).
LaurentPoly small_resolution_oracle(const SchubertInput& in, int p);

// Stalk Poincare polynomial of IC of the p-th stratum along the open q-th
// stratum (shifted back by m_p): the B_pq polynomial.
LaurentPoly stalk_table(const SchubertInput& in, int p, int q);

struct SummandEntry {
    int q;
    std::map<int, long long> mults;  // perverse shift -> multiplicity
};

// Summands of the pushforward off the dense stratum; IC of the p-th stratum
// itself sits once at shift 0 and is implicit.
struct SummandTable {
    int p;
    std::vector<SummandEntry> entries;  // q descending p-1..1
};

SummandTable summand_table(const SchubertInput& in, int p);

struct PerverseEntry {
    bool ic_top;     // the IC of the whole variety
    int q;           // support stratum when !ic_top
    long long mult;
};

// shift i -> summand list, for the full resolution p = r+1.
using PerverseTable = std::map<int, std::vector<PerverseEntry>>;

PerverseTable perverse_table(const SchubertInput& in);

// Membership of sigma_nu in the image of the Gysin cup product, i.e. the
// E_pq basis: all p-q parts at least c+1-q.
bool in_gysin_image(const Partition& nu, const SchubertInput& in, int p, int q);

struct LocalDecomposition {
    int p = 0, l = 0;
    std::map<int, std::vector<Partition>> classes;  // stratum q -> members of A_pl basis
    bool gysin_bijection = false;   // class q<p = image of D_pq x B_ql, injectively
    bool cokernel_is_b_basis = false;  // class-p members = B_pl rectangle basis
    bool count_identity = false;       // A_pl poly = sum_q t^{2d_pq} f_pq B_ql-poly
    // c <= k; the last two identities hold exactly when the stratum
    // resolutions are small, so that is where they are asserted
    bool small_resolution_regime = false;

    bool ok() const {
        return gysin_bijection &&
               (!small_resolution_regime || (cokernel_is_b_basis && count_identity));
    }
};

// Classifies the A_pl basis by stratum and verifies the direct-sum shape.
// classification_error propagates if any partition gets no or two classes.
LocalDecomposition local_decomposition(const SchubertInput& in, int p, int l);

// For 0 <= i <= delta_pq, the Lefschetz power matrix on the D_pq ring is
// square of full exact rank. Requires delta_pq >= 0.
bool hard_lefschetz_verify(const SchubertInput& in, int p, int q);

}  // namespace schubert

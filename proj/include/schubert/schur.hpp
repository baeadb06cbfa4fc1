#pragma once

// The cohomology ring of Gr(rows, C^{rows+cols}) in its Schur basis:
// Pieri products, Littlewood-Richardson products, multiplication by the
// full-rectangle class, and exact Lefschetz power matrices.

#include "schubert/laurent.hpp"
#include "schubert/partition.hpp"

#include <map>
#include <vector>

namespace schubert {

// Basis: partitions inside the rows x cols rectangle. rows is the rank of
// the tautological quotient (p-q in the geometry), cols the complement.
struct RingSpec {
    int rows = 0;
    int cols = 0;
    Rectangle rect() const { return {rows, cols}; }
    bool operator==(const RingSpec& o) const { return rows == o.rows && cols == o.cols; }
};

class SchurVector {
public:
    explicit SchurVector(RingSpec spec) : spec_(spec) {}
    static SchurVector basis_element(RingSpec spec, const Partition& p);

    RingSpec spec() const { return spec_; }
    const std::map<Partition, Int, PartitionOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Partition& p) const;
    void add_term(const Partition& p, const Int& c);

    bool operator==(const SchurVector& o) const {
        return spec_ == o.spec_ && terms_ == o.terms_;
    }

    std::string str() const;  // "sigma_(2) + 2*sigma_(1,1)"; "0" when empty

private:
    RingSpec spec_;
    std::map<Partition, Int, PartitionOrder> terms_;
};

// Horizontal strip of m boxes added to lam, truncated to the rectangle.
SchurVector pieri_row(RingSpec spec, const Partition& lam, int m);

// Vertical strip of m boxes; requires m <= spec.rows.
SchurVector pieri_column(RingSpec spec, const Partition& lam, int m);

// Full LR expansion of s_lam * s_mu keeping partitions of at most max_rows
// parts, with no column truncation.
std::map<Partition, Int, PartitionOrder> lr_expand(const Partition& lam,
                                                   const Partition& mu, int max_rows);

SchurVector lr_multiply(const SchurVector& u, const SchurVector& v);

// sigma_{lam + (a^rows)} when it fits, zero otherwise.
SchurVector multiply_by_full_rectangle(RingSpec spec, const Partition& lam, int a);

using IntMatrix = std::vector<std::vector<Int>>;

// Matrix of cup product by sigma_(1)^i from the weight-(rows*cols - i)/2
// basis to the weight-(rows*cols + i)/2 basis; 0x0 when the parity fails.
IntMatrix lefschetz_power_matrix(RingSpec spec, int i);

// Rank over the rationals, fraction-free Bareiss elimination.
int matrix_rank_exact(IntMatrix m);

}  // namespace schubert

#pragma once

// The special Schubert variety {V in Gr_k(C^l) : dim(V cap F) >= i} for a
// fixed j-plane F: input validation and the numeric invariants of its
// stratification and of its two standard resolutions.

#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Regime { non_small, all_small };

inline const char* regime_name(Regime r) {
    return r == Regime::non_small ? "non-small" : "all-small";
}

// 0 < i < k <= j < l and r = k-i < l-j = c. Strata are indexed 1..r+1.
struct SchubertInput {
    int i = 0, j = 0, k = 0, l = 0;
    int r = 0, c = 0;
    Regime regime = Regime::non_small;

    int strata() const { return r + 1; }
    int i_p(int p) const { return k - p + 1; }
};

SchubertInput validate(int i, int j, int k, int l);

struct Stratum {
    int p;
    int i_p;
    long long m_p;  // (k+1-p)(j+p-k-1) + (p-1)(l-k)
};

struct StratumTable {
    std::vector<Stratum> strata;  // p = 1..r+1
    long long n;                  // m_{r+1}
    long long m(int p) const { return strata.at(static_cast<size_t>(p - 1)).m_p; }
};

StratumTable stratum_invariants(const SchubertInput& in);

struct PairInvariants {
    int p, q;
    long long k_pq;     // (p-q)(k+1-p), dim of the fiber F_pq
    long long d_pq;     // (p-q)(c+1-q)
    long long delta_pq; // (p-q)(k-c+q-p) = k_pq - d_pq
    long long kbar_pq;  // (p-q)(c-p+1), dim of the fiber G_pq
};

struct PairTable {
    std::vector<PairInvariants> pairs;  // p ascending, then q ascending
    const PairInvariants& at(int p, int q) const;
};

PairTable pair_invariants(const SchubertInput& in);

struct ResolutionReport {
    int p;
    bool xi_small;     // kbar_pq < m_p - m_q - kbar_pq for all q < p
    bool pi_small;     // delta_pq < 0 for all q < p
    bool pi_semismall; // delta_pq <= 0 for all q < p
};

std::vector<ResolutionReport> resolution_smallness(const SchubertInput& in);

enum class FiberKind { F_p, F_pq, G_pq };

struct FiberDescriptor {
    FiberKind kind;
    int p, q;  // q = 0 for F_p
    int a, b;  // Gr_a(C^b)
    long long dim() const { return static_cast<long long>(a) * (b - a); }
};

// F_p = Gr_i(C^{i_p}) only.
std::vector<FiberDescriptor> fiber_descriptors(const SchubertInput& in, int p);
// F_p, F_pq = Gr_{i_p}(C^{i_q}) and G_pq = Gr_{p-q}(C^{c-q+1}).
std::vector<FiberDescriptor> fiber_descriptors(const SchubertInput& in, int p, int q);

}  // namespace schubert

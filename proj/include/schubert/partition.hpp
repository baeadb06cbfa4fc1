#pragma once

// Integer partitions and rectangles, plus the partition-level index maps
// used on Schur bases: rectangle containment, enumeration by weight,
// rectangle addition, the Gysin concatenation and its inverse classifier.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// Weakly decreasing positive parts; zero parts are never stored, so each
// partition has exactly one representation. operator[] pads with zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition parse(std::string_view text);  // "2,1"; empty string = zero partition

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const;
    int operator[](int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
};

std::string to_text(const Partition& p);

// Canonical order: weight ascending, then lexicographically descending.
// Matches the bucket order produced by enumerate_by_weight.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

struct Rectangle {
    int rows = 0;
    int cols = 0;
};

bool contains(Rectangle rect, const Partition& p);

Partition conjugate(const Partition& p);

// p padded with zeros to exactly `rows` parts, `amount` added to each.
Partition add_to_parts(const Partition& p, int rows, int amount);

// (head_1+shift, ..., head_{head_rows}+shift, tail_1, ...).
// Requires tail_1 <= shift so the concatenation stays weakly decreasing.
Partition gysin_compose(const Partition& head, const Partition& tail,
                        int head_rows, int shift);

// Raised when the direct-sum classification below fails to be total or
// single-valued; reachable only from deliberately broken inputs in tests.
class classification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The unique q in [l, p] with nu_1..nu_{p-q} >= c+1-q and the remaining
// entries (zero-padded to p-l) <= c+1-q.
int classify_stratum(const Partition& nu, int p, int l, int c);

class enum_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// rows*cols cap for exhaustive enumeration; SCHUBERT_ENUM_LIMIT overrides.
long enumeration_limit();

// Entry w lists the partitions of weight w inside rect, lex-descending.
// Throws enum_limit_error when rect.rows*rect.cols exceeds the limit.
std::vector<std::vector<Partition>> enumerate_by_weight(Rectangle rect);
std::vector<std::vector<Partition>> enumerate_by_weight(Rectangle rect, long limit);

}  // namespace schubert

#include "schubert/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace schubert {

namespace {

void check_canonical(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    check_canonical(parts_);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string tok(text.substr(pos, comma - pos));
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse partition part '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("cannot parse partition part '" + tok + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_text(const Partition& p) {
    std::ostringstream out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out << ',';
        out << p[i];
    }
    return out.str();
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b.parts() < a.parts();
}

bool contains(Rectangle rect, const Partition& p) {
    return p.length() <= rect.rows && p[0] <= rect.cols;
}

Partition conjugate(const Partition& p) {
    std::vector<int> tr(static_cast<size_t>(p[0]), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) tr[static_cast<size_t>(j)]++;
    return Partition(std::move(tr));
}

Partition add_to_parts(const Partition& p, int rows, int amount) {
    if (rows < 0 || amount < 0)
        throw std::invalid_argument("add_to_parts needs nonnegative rows and amount");
    if (p.length() > rows)
        throw std::invalid_argument("add_to_parts: partition has more than `rows` parts");
    std::vector<int> parts(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) parts[static_cast<size_t>(i)] = p[i] + amount;
    return Partition(std::move(parts));
}

Partition gysin_compose(const Partition& head, const Partition& tail,
                        int head_rows, int shift) {
    if (shift < 0) throw std::invalid_argument("gysin_compose: negative shift");
    if (tail[0] > shift)
        throw std::invalid_argument("gysin_compose: concatenation is not a partition");
    Partition raised = add_to_parts(head, head_rows, shift);
    std::vector<int> parts = raised.parts();
    for (int i = 0; i < tail.length(); ++i) parts.push_back(tail[i]);
    return Partition(std::move(parts));
}

int classify_stratum(const Partition& nu, int p, int l, int c) {
    if (l > p) throw std::invalid_argument("classify_stratum: l > p");
    if (nu.length() > p - l)
        throw std::invalid_argument("classify_stratum: too many parts for the p-l rectangle");
    int found = -1;
    for (int q = l; q <= p; ++q) {
        int threshold = c + 1 - q;
        bool match = true;
        for (int idx = 0; idx < p - q && match; ++idx) match = nu[idx] >= threshold;
        for (int idx = p - q; idx < p - l && match; ++idx) match = nu[idx] <= threshold;
        if (!match) continue;
        if (found != -1)
            throw classification_error("classify_stratum: classes q=" + std::to_string(found) +
                                       " and q=" + std::to_string(q) + " both match");
        found = q;
    }
    if (found == -1)
        throw classification_error("classify_stratum: no class matches");
    return found;
}

long enumeration_limit() {
    if (const char* env = std::getenv("SCHUBERT_ENUM_LIMIT")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return 64;
}

std::vector<std::vector<Partition>> enumerate_by_weight(Rectangle rect) {
    return enumerate_by_weight(rect, enumeration_limit());
}

std::vector<std::vector<Partition>> enumerate_by_weight(Rectangle rect, long limit) {
    if (rect.rows < 0 || rect.cols < 0)
        throw std::invalid_argument("enumerate_by_weight: negative rectangle");
    long boxes = static_cast<long>(rect.rows) * rect.cols;
    if (boxes > limit)
        throw enum_limit_error("enumeration limit exceeded: " + std::to_string(boxes) +
                               " boxes > " + std::to_string(limit));
    std::vector<std::vector<Partition>> buckets(static_cast<size_t>(boxes) + 1);
    std::vector<int> prefix;
    // DFS, children before the node itself: lex-descending overall order.
    auto rec = [&](auto&& self, int maxpart, int rowsleft, int weight) -> void {
        if (rowsleft > 0) {
            for (int part = std::min(maxpart, rect.cols); part >= 1; --part) {
                prefix.push_back(part);
                self(self, part, rowsleft - 1, weight + part);
                prefix.pop_back();
            }
        }
        buckets[static_cast<size_t>(weight)].push_back(Partition(prefix));
    };
    rec(rec, rect.cols, rect.rows, 0);
    return buckets;
}

}  // namespace schubert

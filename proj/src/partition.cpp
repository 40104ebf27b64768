#include "w2q/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace w2q {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> cols(static_cast<size_t>(p.part(0)), 0);
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p.part(r); ++c) cols[static_cast<size_t>(c)]++;
    return Partition{cols};
}

bool is_p_regular(const Partition& p, int prime) {
    if (prime < 2) throw std::invalid_argument("is_p_regular: prime must be >= 2");
    int run = 1;
    for (int i = 1; i < p.length(); ++i) {
        run = (p.part(i) == p.part(i - 1)) ? run + 1 : 1;
        if (run >= prime) return false;
    }
    return p.length() == 0 || run < prime;
}

bool is_p_restricted(const Partition& p, int prime) {
    if (prime < 2) throw std::invalid_argument("is_p_restricted: prime must be >= 2");
    for (int i = 0; i < p.length(); ++i)
        if (p.part(i) - p.part(i + 1) >= prime) return false;
    return true;
}

std::strong_ordering lex_cmp(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("lex_cmp: partitions of different n are not comparable");
    return a <=> b;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("dominance_leq: partitions of different n are not comparable");
    long suma = 0, sumb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        suma += a.part(i);
        sumb += b.part(i);
        if (suma > sumb) return false;
    }
    return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
    Partition q = conjugate(p);
    std::vector<std::vector<int>> h(static_cast<size_t>(p.length()));
    for (int r = 0; r < p.length(); ++r) {
        h[static_cast<size_t>(r)].resize(static_cast<size_t>(p.part(r)));
        for (int c = 0; c < p.part(r); ++c) {
            int arm = p.part(r) - c - 1;
            int leg = q.part(c) - r - 1;
            h[static_cast<size_t>(r)][static_cast<size_t>(c)] = arm + leg + 1;
        }
    }
    return h;
}

}  // namespace w2q

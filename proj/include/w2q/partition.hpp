#pragma once

#include <compare>
#include <string>
#include <vector>

namespace w2q {

/* A partition, stored as its weakly decreasing positive parts with no
 * trailing zeros. The empty partition is the unique partition of 0.
 * operator<=> compares part vectors componentwise; restricted to
 * partitions of one n this is the lexicographic order.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // i is 0-based; parts beyond the last are 0
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const = default;

    std::string to_string() const;  // "(6,3,3,3,2,2)", "()" when empty

private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition conjugate(const Partition& p);

// no part value occurs >= prime times
bool is_p_regular(const Partition& p, int prime);

// successive differences (with a trailing 0) are all < prime;
// equivalently the conjugate is p-regular
bool is_p_restricted(const Partition& p, int prime);

// total lexicographic order within one block; rejects |a| != |b|
std::strong_ordering lex_cmp(const Partition& a, const Partition& b);

// dominance a <| b: all partial sums of a are <= those of b; rejects |a| != |b|
bool dominance_leq(const Partition& a, const Partition& b);

// hook_lengths(p)[r][c] = arm + leg + 1 of the hook at cell (r,c), 0-based
std::vector<std::vector<int>> hook_lengths(const Partition& p);

}  // namespace w2q

#pragma once

// Brute-force oracles for the tests, working on Young diagrams directly so
// that they share no code path with the abacus machinery they check.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "w2q/partition.hpp"
#include "w2q/weight2.hpp"

namespace w2q::oracle {

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition{current});
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            current.push_back(part);
            self(self, rest - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

struct RimRemoval {
    Partition result;
    int leg = 0;
};

// remove the rim hook of the (0-based) cell (r,c); requires a hook there
inline RimRemoval remove_rim_hook(const Partition& p, int r, int c) {
    Partition q = conjugate(p);
    int leg = q.part(c) - r - 1;
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) parts.push_back(p.part(i));
    for (int i = r; i < r + leg; ++i) parts.push_back(p.part(i + 1) - 1);
    parts.push_back(c);
    for (int i = r + leg + 1; i < p.length(); ++i) parts.push_back(p.part(i));
    return {Partition{parts}, leg};
}

// all one-step removals of a rim hook of length len
inline std::vector<RimRemoval> rim_hook_removals(const Partition& p, int len) {
    std::vector<RimRemoval> out;
    auto hooks = hook_lengths(p);
    for (size_t r = 0; r < hooks.size(); ++r)
        for (size_t c = 0; c < hooks[r].size(); ++c)
            if (hooks[r][c] == len)
                out.push_back(remove_rim_hook(p, static_cast<int>(r), static_cast<int>(c)));
    return out;
}

inline std::pair<Partition, int> core_and_weight(const Partition& p, int prime) {
    Partition cur = p;
    int weight = 0;
    for (;;) {
        auto removals = rim_hook_removals(cur, prime);
        if (removals.empty()) return {cur, weight};
        cur = removals.front().result;
        ++weight;
    }
}

// delta and colour of a weight-2 partition straight from the diagram
inline DeltaColour delta_colour(const Partition& p, int prime) {
    std::set<int> diffs;
    std::set<Partition> cores;
    std::vector<int> first_legs;
    for (const RimRemoval& first : rim_hook_removals(p, prime)) {
        for (const RimRemoval& second : rim_hook_removals(first.result, prime)) {
            diffs.insert(std::abs(first.leg - second.leg));
            cores.insert(second.result);
        }
        first_legs.push_back(first.leg);
    }
    if (diffs.size() != 1 || cores.size() != 1)
        throw std::logic_error("oracle::delta_colour: removal sequences disagree");
    DeltaColour dc;
    dc.delta = *diffs.begin();
    if (dc.delta != 0) return dc;

    // the two divisible hook-diagram entries decide the colour
    auto hooks = hook_lengths(p);
    std::vector<std::pair<int, int>> divisible;  // (hook length, leg)
    Partition q = conjugate(p);
    for (size_t r = 0; r < hooks.size(); ++r)
        for (size_t c = 0; c < hooks[r].size(); ++c)
            if (hooks[r][c] % prime == 0)
                divisible.push_back({hooks[r][c], q.part(static_cast<int>(c)) - static_cast<int>(r) - 1});
    if (divisible.size() != 2) throw std::logic_error("oracle::delta_colour: not weight 2");
    if (divisible[0].first == prime && divisible[1].first == prime) {
        int larger = std::max(divisible[0].second, divisible[1].second);
        if (std::abs(divisible[0].second - divisible[1].second) != 1)
            throw std::logic_error("oracle::delta_colour: p-hook legs do not differ by 1");
        dc.colour = larger % 2 == 0 ? Colour::Black : Colour::White;
    } else {
        int leg = divisible[0].first == 2 * prime ? divisible[0].second : divisible[1].second;
        dc.colour = (leg % 4 == 0 || leg % 4 == 3) ? Colour::Black : Colour::White;
    }
    return dc;
}

}  // namespace w2q::oracle

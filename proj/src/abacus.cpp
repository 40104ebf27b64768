#include "w2q/abacus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace w2q {

bool AbacusDisplay::has_bead(int pos) const {
    return std::binary_search(beads.begin(), beads.end(), pos);
}

AbacusDisplay display(const Partition& p, int prime, int bead_count) {
    if (prime < 2) throw std::invalid_argument("display: prime must be >= 2");
    if (bead_count < p.length())
        throw std::invalid_argument("display: bead_count too small for partition");
    AbacusDisplay d;
    d.prime = prime;
    d.bead_count = bead_count;
    d.beads.reserve(static_cast<size_t>(bead_count));
    for (int i = 1; i <= bead_count; ++i) d.beads.push_back(p.part(i - 1) - i + bead_count);
    std::sort(d.beads.begin(), d.beads.end());
    return d;
}

Partition to_partition(const AbacusDisplay& d) {
    // part for the bead at position q = number of gaps before q = q - (#beads below q)
    std::vector<int> parts;
    for (int i = d.bead_count - 1; i >= 0; --i) {
        int part = d.beads[static_cast<size_t>(i)] - i;
        if (part == 0) break;  // beads are sorted, parts weakly decrease
        parts.push_back(part);
    }
    return Partition{parts};
}

std::pair<Partition, int> p_core_and_weight(const Partition& p, int prime) {
    if (prime < 2) throw std::invalid_argument("p_core_and_weight: prime must be >= 2");
    int t = std::max(p.length(), 1);
    AbacusDisplay d = display(p, prime, t);
    // push all beads on each runner as far up as possible
    std::vector<std::vector<int>> rows(static_cast<size_t>(prime));
    for (int q : d.beads) rows[static_cast<size_t>(q % prime)].push_back(q / prime);
    int weight = 0;
    AbacusDisplay core = d;
    core.beads.clear();
    for (int r = 0; r < prime; ++r) {
        auto& rr = rows[static_cast<size_t>(r)];
        std::sort(rr.begin(), rr.end());
        for (size_t k = 0; k < rr.size(); ++k) {
            weight += rr[k] - static_cast<int>(k);
            core.beads.push_back(static_cast<int>(k) * prime + r);
        }
    }
    std::sort(core.beads.begin(), core.beads.end());
    return {to_partition(core), weight};
}

std::vector<int> runner_counts(const AbacusDisplay& d) {
    std::vector<int> counts(static_cast<size_t>(d.prime), 0);
    for (int q : d.beads) counts[static_cast<size_t>(q % d.prime)]++;
    return counts;
}

AbacusDisplay swap_runners(const AbacusDisplay& d, int i) {
    if (i < 2 || i > d.prime) throw std::invalid_argument("swap_runners: runner index out of range");
    AbacusDisplay out = d;
    for (int& q : out.beads) {
        int r = q % d.prime + 1;
        if (r == i) q -= 1;
        else if (r == i - 1) q += 1;
    }
    std::sort(out.beads.begin(), out.beads.end());
    return out;
}

static int beads_between(const AbacusDisplay& d, int lo, int hi) {
    // beads q with lo < q < hi
    auto a = std::upper_bound(d.beads.begin(), d.beads.end(), lo);
    auto b = std::lower_bound(d.beads.begin(), d.beads.end(), hi);
    return static_cast<int>(b - a);
}

std::vector<MovableBead> movable_beads_up(const AbacusDisplay& d) {
    std::vector<MovableBead> out;
    for (int q : d.beads) {
        if (q >= d.prime && !d.has_bead(q - d.prime))
            out.push_back({q, beads_between(d, q - d.prime, q)});
    }
    return out;
}

Weight2Label weight2_label(const AbacusDisplay& d) {
    auto [core, weight] = p_core_and_weight(to_partition(d), d.prime);
    (void)core;
    if (weight != 2) throw std::invalid_argument("weight2_label: displayed partition has weight != 2");
    auto mov = movable_beads_up(d);
    if (mov.size() == 2) {
        int r0 = d.runner_of(mov[0].position), r1 = d.runner_of(mov[1].position);
        return {Weight2Label::Kind::TwoRunners, std::max(r0, r1), std::min(r0, r1)};
    }
    if (mov.size() != 1) throw std::logic_error("weight2_label: weight-2 display without 1 or 2 movable beads");
    int q = mov[0].position;
    int r = d.runner_of(q);
    if (d.has_bead(q + d.prime)) return {Weight2Label::Kind::SameRunner, r, r};
    if (q >= 2 * d.prime && !d.has_bead(q - 2 * d.prime))
        return {Weight2Label::Kind::SingleDouble, r, r};
    throw std::logic_error("weight2_label: unrecognized weight-2 constellation");
}

std::vector<DivisibleHook> divisible_hooks(const AbacusDisplay& d) {
    std::vector<DivisibleHook> out;
    for (int q : d.beads) {
        for (int g = q - d.prime; g >= 0; g -= d.prime) {
            if (!d.has_bead(g)) {
                DivisibleHook h;
                h.bead_row = d.row_of(q);
                h.gap_row = d.row_of(g);
                h.runner = d.runner_of(q);
                h.hook_length = d.prime * (h.bead_row - h.gap_row);
                h.leg_length = beads_between(d, g, q);
                out.push_back(h);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DivisibleHook& a, const DivisibleHook& b) {
        return std::tie(a.runner, a.bead_row, a.gap_row) < std::tie(b.runner, b.bead_row, b.gap_row);
    });
    return out;
}

std::string pretty(const AbacusDisplay& d) {
    int rows = d.beads.empty() ? 1 : d.beads.back() / d.prime + 1;
    std::string s;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < d.prime; ++c) {
            s += d.has_bead(r * d.prime + c) ? 'o' : '-';
            if (c + 1 < d.prime) s += ' ';
        }
        s += '\n';
    }
    return s;
}

}  // namespace w2q

#include "w2q/weight2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace w2q {

Partition hook_partition(int k, int l) {
    if (k == 0 && l == 0) return Partition{};
    if (k < 1 || l < 0) throw std::invalid_argument("hook_partition: need k >= 1 or (k,l) = (0,0)");
    std::vector<int> parts{k};
    parts.insert(parts.end(), static_cast<size_t>(l), 1);
    return Partition{parts};
}

std::optional<BlockLabel> hook_core(int prime, int k, int l) {
    if (prime < 3) throw std::invalid_argument("hook_core: prime must be >= 3");
    if (k < 0 || l < 0 || (k == 0 && l > 0)) return std::nullopt;
    int s = k + l;
    bool is_core = (s <= prime - 1) || (s >= prime + 1 && s <= 2 * prime - 1 && k < prime + 1 && l < prime);
    Partition hook = hook_partition(k, l);
    // the closed-form condition must agree with stripping rim hooks
    auto [core, weight] = p_core_and_weight(hook, prime);
    if (is_core != (weight == 0 && core == hook))
        throw std::logic_error("hook_core: core criterion disagrees with abacus reduction");
    if (!is_core) return std::nullopt;
    return BlockLabel{prime, hook, 2};
}

static int count_between(const std::vector<int>& beads, int lo, int hi) {
    auto a = std::upper_bound(beads.begin(), beads.end(), lo);
    auto b = std::lower_bound(beads.begin(), beads.end(), hi);
    return static_cast<int>(b - a);
}

std::vector<Partition> block_partitions(const BlockLabel& b) {
    if (b.weight != 2) throw std::invalid_argument("block_partitions: only weight-2 blocks are enumerated");
    int p = b.prime;
    int t = b.core.length() + 2 * p;
    AbacusDisplay core = display(b.core, p, t);
    // last (lowest) bead on each runner; every runner has >= 2 beads at this t
    std::vector<int> last(static_cast<size_t>(p), -1);
    for (int q : core.beads) last[static_cast<size_t>(q % p)] = std::max(last[static_cast<size_t>(q % p)], q);
    std::set<Partition> out;
    auto with_beads = [&](std::vector<int> beads) {
        std::sort(beads.begin(), beads.end());
        AbacusDisplay d{p, t, std::move(beads)};
        out.insert(to_partition(d));
    };
    for (int i = 0; i < p; ++i) {
        int qi = last[static_cast<size_t>(i)];
        {  // <i>: one bead moved down two steps
            std::vector<int> beads = core.beads;
            std::replace(beads.begin(), beads.end(), qi, qi + 2 * p);
            with_beads(std::move(beads));
        }
        {  // <i,i>: the two lowest beads of the runner each moved down one
            std::vector<int> beads = core.beads;
            std::replace(beads.begin(), beads.end(), qi - p, qi + p);
            with_beads(std::move(beads));
        }
        for (int j = i + 1; j < p; ++j) {  // <j,i>
            int qj = last[static_cast<size_t>(j)];
            std::vector<int> beads = core.beads;
            std::replace(beads.begin(), beads.end(), qi, qi + p);
            std::replace(beads.begin(), beads.end(), qj, qj + p);
            with_beads(std::move(beads));
        }
    }
    if (static_cast<int>(out.size()) != 2 * p + p * (p - 1) / 2)
        throw std::logic_error("block_partitions: unexpected block size");
    std::vector<Partition> parts(out.begin(), out.end());
    std::reverse(parts.begin(), parts.end());  // lex descending
    return parts;
}

static Colour colour_of_2p_hook_leg(int leg) {
    int r = leg % 4;
    return (r == 0 || r == 3) ? Colour::Black : Colour::White;
}

DeltaColour delta(const Partition& part, int prime) {
    auto [core, weight] = p_core_and_weight(part, prime);
    (void)core;
    if (weight != 2) throw std::invalid_argument("delta: partition must have weight exactly 2");
    int p = prime;
    AbacusDisplay d = display(part, p, part.length() + 2 * p);
    Weight2Label label = weight2_label(d);
    auto mov = movable_beads_up(d);

    DeltaColour dc;
    if (label.kind == Weight2Label::Kind::SingleDouble) {
        int q = mov[0].position;
        int leg1 = count_between(d.beads, q - p, q);
        int leg2 = count_between(d.beads, q - 2 * p, q - p);
        dc.delta = std::abs(leg1 - leg2);
        if (dc.delta == 0) dc.colour = colour_of_2p_hook_leg(count_between(d.beads, q - 2 * p, q));
    } else if (label.kind == Weight2Label::Kind::SameRunner) {
        int q = mov[0].position;  // upper of the two consecutive beads
        int leg1 = count_between(d.beads, q - p, q);
        int leg2 = count_between(d.beads, q, q + p);
        dc.delta = std::abs(leg1 - leg2);
        if (dc.delta == 0) dc.colour = colour_of_2p_hook_leg(count_between(d.beads, q - p, q + p));
    } else {
        int qa = mov[0].position, qb = mov[1].position;
        auto removal = [&](int first, int second) {
            int l1 = count_between(d.beads, first - p, first);
            std::vector<int> moved = d.beads;
            std::replace(moved.begin(), moved.end(), first, first - p);
            std::sort(moved.begin(), moved.end());
            int l2 = count_between(moved, second - p, second);
            return std::abs(l1 - l2);
        };
        int d1 = removal(qa, qb), d2 = removal(qb, qa);
        if (d1 != d2) throw std::logic_error("delta: removal orders disagree");
        dc.delta = d1;
        if (dc.delta == 0) {
            int la = count_between(d.beads, qa - p, qa);
            int lb = count_between(d.beads, qb - p, qb);
            if (std::abs(la - lb) != 1)
                throw std::logic_error("delta: p-hook leg lengths do not differ by 1 at delta 0");
            dc.colour = (std::max(la, lb) % 2 == 0) ? Colour::Black : Colour::White;
        }
    }
    return dc;
}

std::optional<Partition> lambda_plus(const Partition& part, int prime) {
    auto [core, weight] = p_core_and_weight(part, prime);
    if (weight != 2) throw std::invalid_argument("lambda_plus: partition must have weight exactly 2");
    DeltaColour dc = delta(part, prime);
    std::optional<Partition> best;
    for (const Partition& mu : block_partitions(BlockLabel{prime, core, 2})) {
        if (mu > part && delta(mu, prime) == dc && (!best || mu < *best)) best = mu;
    }
    if (best.has_value() != is_p_restricted(part, prime))
        throw std::logic_error("lambda_plus: existence disagrees with p-restrictedness");
    return best;
}

std::optional<Partition> lambda_minus(const Partition& part, int prime) {
    auto [core, weight] = p_core_and_weight(part, prime);
    if (weight != 2) throw std::invalid_argument("lambda_minus: partition must have weight exactly 2");
    DeltaColour dc = delta(part, prime);
    std::optional<Partition> best;
    for (const Partition& mu : block_partitions(BlockLabel{prime, core, 2})) {
        if (mu < part && delta(mu, prime) == dc && (!best || mu > *best)) best = mu;
    }
    if (best.has_value() != is_p_regular(part, prime))
        throw std::logic_error("lambda_minus: existence disagrees with p-regularity");
    return best;
}

}  // namespace w2q

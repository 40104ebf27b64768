#pragma once

#include <string>
#include <utility>
#include <vector>

#include "w2q/partition.hpp"

namespace w2q {

/* An abacus display: t beads at distinct non-negative positions on p runners.
 * Positions run left to right, top to bottom, starting at 0; position q sits
 * on runner (q mod p) + 1 (runners are labelled 1..p) in row q / p (row 0 is
 * the top). A partition lambda on t beads occupies positions lambda_i - i + t.
 */
struct AbacusDisplay {
    int prime = 0;
    int bead_count = 0;
    std::vector<int> beads;  // sorted, distinct

    int runner_of(int pos) const { return pos % prime + 1; }
    int row_of(int pos) const { return pos / prime; }
    int position(int row, int runner) const { return row * prime + runner - 1; }
    bool has_bead(int pos) const;
};

AbacusDisplay display(const Partition& p, int prime, int bead_count);
Partition to_partition(const AbacusDisplay& d);

std::pair<Partition, int> p_core_and_weight(const Partition& p, int prime);

// counts[r-1] = number of beads on runner r
std::vector<int> runner_counts(const AbacusDisplay& d);

// exchange runners i and i-1 row by row; 2 <= i <= p
AbacusDisplay swap_runners(const AbacusDisplay& d, int i);

struct MovableBead {
    int position;    // bead q with q - p free
    int leg_length;  // beads strictly between q - p and q
};
std::vector<MovableBead> movable_beads_up(const AbacusDisplay& d);

struct Weight2Label {
    enum class Kind { SingleDouble, TwoRunners, SameRunner };
    Kind kind;
    int hi = 0;  // runner indices; hi == lo except for TwoRunners where hi > lo
    int lo = 0;
};
// requires the displayed partition to have weight exactly 2
Weight2Label weight2_label(const AbacusDisplay& d);

/* One record per (bead at (bead_row, runner), gap at (gap_row, runner)) with
 * gap_row < bead_row; in bijection with the entries of the hook diagram
 * divisible by p. hook_length = p * (bead_row - gap_row), leg_length = beads
 * passed when moving the bead up to the gap.
 */
struct DivisibleHook {
    int bead_row, gap_row, runner, hook_length, leg_length;
};
std::vector<DivisibleHook> divisible_hooks(const AbacusDisplay& d);

// the bullet/dash grid, one runner per column
std::string pretty(const AbacusDisplay& d);

}  // namespace w2q

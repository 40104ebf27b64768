#pragma once

#include <optional>
#include <vector>

#include "w2q/abacus.hpp"
#include "w2q/partition.hpp"

namespace w2q {

enum class Colour { Black, White };

/* Richards' invariant of a weight-2 partition: the absolute leg-length
 * difference of the two removed rim p-hooks, plus a black/white colour
 * refinement defined exactly when delta = 0.
 */
struct DeltaColour {
    int delta = 0;
    std::optional<Colour> colour;  // present iff delta == 0
    bool operator==(const DeltaColour&) const = default;
};

struct BlockLabel {
    int prime = 0;
    Partition core;
    int weight = 0;

    int n() const { return core.n() + prime * weight; }
    auto operator<=>(const BlockLabel&) const = default;
};

// the hook partition (k, 1^l); requires k >= 1 or (k,l) == (0,0)
Partition hook_partition(int k, int l);

/* The weight-2 block labelled by the hook core (k,1^l), when that hook is a
 * p-core: either 0 <= k+l <= p-1, or p+1 <= k+l <= 2p-1 with k < p+1, l < p.
 */
std::optional<BlockLabel> hook_core(int prime, int k, int l);

/* All partitions of a weight-2 block: the distinct results of two single
 * down-moves on the core display, sorted lexicographically descending.
 * Always 2p + p(p-1)/2 of them.
 */
std::vector<Partition> block_partitions(const BlockLabel& b);

// delta and, when delta = 0, the colour; requires weight exactly 2.
// Every admissible removal order is evaluated and checked for agreement.
DeltaColour delta(const Partition& p, int prime);

/* lambda_plus: the lexicographically smallest partition above p with the same
 * core, weight 2, the same delta and (if delta = 0) the same colour; exists
 * iff p is p-restricted. lambda_minus is the dual below p, existing iff p is
 * p-regular.
 */
std::optional<Partition> lambda_plus(const Partition& p, int prime);
std::optional<Partition> lambda_minus(const Partition& p, int prime);

}  // namespace w2q

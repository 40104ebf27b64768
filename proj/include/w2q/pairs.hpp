#pragma once

#include <utility>
#include <vector>

#include "w2q/weight2.hpp"

namespace w2q {

/* A (2:1)-pair of weight-2 blocks (upper at n, lower at n-1), with the shared
 * abacus geometry, the six exceptional partitions, the segment counts of the
 * bead windows around the swapped runner pair, and the case number 1..6.
 *
 * On the shared display the upper core has exactly one more bead on runner
 * `runner` than on runner-1; b is the bead count of runner-1 there. The
 * segment counts read the other runners: l1/r1 in rows b/b-1 left/right of
 * the pair, l2/r2 in rows b+1/b.
 */
struct PairData {
    BlockLabel upper, lower;
    int bead_count = 0;  // shared display size t
    int runner = 0;      // i in 2..p
    Partition alpha, beta, gamma;              // of upper:  <i,i>, <i,i-1>, <i-1>
    Partition alpha_bar, beta_bar, gamma_bar;  // of lower:  <i>, <i,i-1>, <i-1,i-1>
    int l1 = 0, l2 = 0, r1 = 0, r2 = 0;
    int case_no = 0;

    int d() const { return l1 + r1 - l2 - r2; }
};

// every (w:k)-pair below b reachable by one adjacent-runner swap, deduplicated
std::vector<std::pair<int, BlockLabel>> find_pairs(const BlockLabel& b);

/* The shared display is the smallest admissible one unless min_bead_count
 * forces a larger one. The case number, d, and the segment sums l1+r1 and
 * l2+r2 are display-independent; the individual left/right splits are not.
 */
PairData make_pair_data(const BlockLabel& upper, const BlockLabel& lower, int min_bead_count = 0);

struct ScopesPair {
    BlockLabel upper, lower;
    int bead_count = 0;
    int runner = 0;
    int k = 0;  // bead-count gap, >= 2
};
ScopesPair make_scopes_pair(const BlockLabel& upper, const BlockLabel& lower);

enum class Direction { Down, Up };

/* The partial Scopes bijection of a (2:1)-pair: good partitions map by the
 * runner swap; beta <-> gamma_bar and gamma <-> beta_bar. alpha and alpha_bar
 * have no image.
 */
Partition phi(const PairData& pd, const Partition& lam, Direction dir);

// the full Scopes bijection of a (2:k)-pair, k >= 2
Partition scopes_relabel(const ScopesPair& sp, const Partition& lam, Direction dir);

struct RegularityRow {
    Partition partition;
    bool regular = false;
    bool restricted = false;
    int delta = 0;
};

/* Regularity/restrictedness/delta of the six exceptional partitions, computed
 * from scratch and checked against the table the case number dictates
 * (order: alpha_bar, beta_bar, gamma_bar, alpha, beta, gamma).
 */
std::vector<RegularityRow> regularity_profile(const PairData& pd);

// Scopes class representatives (k,l) among weight-2 hook blocks; (p-1)^2 + 1 of them
std::vector<std::pair<int, int>> hook_scopes_classes(int prime);

}  // namespace w2q

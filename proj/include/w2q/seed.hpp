#pragma once

#include <map>
#include <vector>

#include "w2q/quiver.hpp"

namespace w2q {

/* Decomposition data of the principal block of F.Sym(2p), p >= 5.
 *
 * Partitions of the block are written on the abacus with two beads per
 * runner; the closed-form label families below are stated in terms of the
 * resulting <i> / <j,i> / <i,i> labels and converted to partitions on
 * construction.
 */

struct ProjectiveColumn {
    Partition label;                        // lex-largest factor, p-regular
    std::vector<Partition> specht_factors;  // top to bottom
};

// one column per p-regular partition; the top one has 3 factors, all others 4
std::vector<ProjectiveColumn> projective_columns(int prime);

// a Loewy structure for each of the 2p + p(p-1)/2 partitions of the block
std::map<Partition, LoewyStructure> specht_structures(int prime);

// closed-form delta/colour table; checked pointwise against delta()
std::map<Partition, DeltaColour> delta_table(int prime);

// the Ext-quiver of the principal block of F.Sym(2p)
Quiver seed_quiver(int prime);

// label -> partition on the two-beads-per-runner abacus (exposed for tests)
Partition seed_label_partition(int prime, const Weight2Label& label);

}  // namespace w2q

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "w2q/pairs.hpp"
#include "w2q/weight2.hpp"

namespace w2q {

struct QuiverVertex {
    Partition partition;
    int delta = 0;
    std::optional<Colour> colour;  // set iff delta == 0
    bool operator==(const QuiverVertex&) const = default;
};

/* The Ext-quiver of a weight-2 block: one vertex per p-regular partition,
 * undirected simple edges, no loops, every edge joining delta-values that
 * differ by exactly 1. Vertices are kept sorted by (delta asc, lex desc);
 * edges are index pairs (a < b). Orientation is derived from the
 * lexicographic order when rendering, never stored.
 */
struct Quiver {
    BlockLabel block;
    std::vector<QuiverVertex> vertices;
    std::set<std::pair<int, int>> edges;

    int index_of(const Partition& p) const;               // -1 if absent
    bool has_edge(const Partition& a, const Partition& b) const;
    std::vector<Partition> neighbours(const Partition& p) const;  // lex descending
    std::vector<int> row_sizes() const;                    // vertices per delta row

    void add_edge(int a, int b);
    void sort_vertices();  // (delta asc, lex desc), edges reindexed
    bool operator==(const Quiver&) const = default;
};

// vertex list for a block: its regular partitions with delta metadata, sorted
std::vector<QuiverVertex> block_vertices(const BlockLabel& b);

struct LoewyStructure {
    std::vector<std::vector<Partition>> layers;  // top to bottom, each lex descending
    bool operator==(const LoewyStructure&) const = default;
};

/* Everything one (2:1)-step knows about the exceptional Specht modules:
 * the supports of the good semisimple pieces and the lambda_plus companions,
 * plus the case-determined Loewy structures of all six exceptional Spechts.
 */
struct ExceptionalStructures {
    PairData pair;
    std::vector<Partition> Ybar, Zbar;  // supports in the lower block
    std::vector<Partition> Y, Z;        // their images in the upper block
    std::optional<Partition> beta_bar_plus, alpha_bar_plus, alpha_plus, beta_plus;
    LoewyStructure S_alpha_bar, S_beta_bar, S_gamma_bar, S_alpha, S_beta, S_gamma;
};

/* Read the supports of Ybar/Zbar off the lower quiver via the Ext-neighbour
 * criterion at alpha_bar and beta_bar. Case 5 leaves Ybar underdetermined by
 * the quiver; with hook_mode it is set to the empty support (the resolved
 * hook conclusion), otherwise this is an error.
 */
ExceptionalStructures extract_bar_data(const Quiver& q_bar, const PairData& pd,
                                       bool hook_mode = false);

// one (2:1)-induction step: the upper quiver plus the exceptional record
std::pair<Quiver, ExceptionalStructures> induct_step(const Quiver& q_bar, const PairData& pd,
                                                     bool hook_mode = false);

// one (2:k>=2)-step: pure relabelling along the Scopes bijection
Quiver scopes_step(const Quiver& q_lower, const ScopesPair& sp);

enum class ChainOrder { KFirst, LFirst };

// the full driver over the canonical parent chain; prime >= 5, (k,1^l) a p-core
Quiver compute_quiver(int prime, int k, int l, ChainOrder order = ChainOrder::KFirst);

}  // namespace w2q

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "w2q/quiver.hpp"

namespace w2q {

// plain undirected simple graph, with optional row metadata per vertex
struct PlainGraph {
    int vertex_count = 0;
    std::set<std::pair<int, int>> edges;  // index pairs (a < b)
    std::vector<int> row;                 // empty, or one row index per vertex

    void add_edge(int a, int b);
    std::vector<std::vector<int>> adjacency() const;
    bool operator==(const PlainGraph&) const = default;
};

PlainGraph underlying_graph(const Quiver& q);

/* Isomorphism via iterated neighbour-colour refinement with backtracking on
 * the refined classes. Returns a vertex bijection g -> h (verified edge by
 * edge before returning), or nothing. Deterministic.
 */
std::optional<std::vector<int>> iso(const PlainGraph& g, const PlainGraph& h);

/* Independent engine: plain backtracking over degree-compatible partial maps,
 * no refinement. Intended for the small reference graphs.
 */
std::optional<std::vector<int>> iso_naive(const PlainGraph& g, const PlainGraph& h);

/* Isomorphism invariants of the proof: vertices of valency <= 2 at distance 2
 * ("exceptional pairs") and the full subgraph on vertices of valency <= 3
 * (the "boundary"), its components classified as isolated vertices, paths,
 * single-branch trees (arm lengths; D_m is arms (1,1,m-2)), or a canonical
 * form string.
 */
struct BoundaryProfile {
    std::vector<std::pair<int, int>> exceptional_pairs;  // vertex ids, for inspection
    int exceptional_pair_count = 0;
    int exceptional_vertex_count = 0;  // distinct vertices among the pairs
    std::vector<std::string> components;  // sorted shape descriptions

    bool same_shape(const BoundaryProfile& o) const {
        return exceptional_pair_count == o.exceptional_pair_count &&
               exceptional_vertex_count == o.exceptional_vertex_count && components == o.components;
    }
    std::string to_string() const;
};

BoundaryProfile boundary_profile(const PlainGraph& g);

}  // namespace w2q

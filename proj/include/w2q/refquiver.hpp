#pragma once

#include "w2q/graph.hpp"

namespace w2q {

struct RefQuiverParams {
    int n = 0;  // >= 5
    int i = 0;
    int j = 0;  // (i,j) = (0,0) or i in 1..n-1, j in 0..n-2
};

/* The reference quiver family, built as a positional surgery chain on the
 * base graph: i left-rim steps followed by j right-rim steps, each removing
 * one rim vertex and inserting one with its new edges. Vertices of the
 * result are numbered row-major; row metadata is filled in.
 */
PlainGraph gen_ref_quiver(const RefQuiverParams& params);

}  // namespace w2q

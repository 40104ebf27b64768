#pragma once

#include <map>
#include <utility>
#include <vector>

#include "w2q/quiver.hpp"

namespace w2q {

/* Morita classes of weight-2 hook blocks: valid hooks partitioned by
 * conjugation and by the one Scopes bridge between the k+l = p-1 and
 * k+l = p+1 diagonals. Representatives: (0,0); k > l with 1 <= k+l <= p-1;
 * k > l with p+1 < k+l <= 2p-1.
 */
std::vector<std::pair<int, int>> morita_census(int prime);

// the five p = 3 quivers, hardcoded; keys are the cores
std::map<Partition, Quiver> p3_fixtures();

}  // namespace w2q

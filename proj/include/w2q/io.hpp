#pragma once

#include <string>

#include <json.hpp>

#include "w2q/census.hpp"
#include "w2q/graph.hpp"
#include "w2q/pairs.hpp"
#include "w2q/quiver.hpp"
#include "w2q/seed.hpp"

namespace w2q {

using json = nlohmann::ordered_json;

// comma-separated parts, e.g. "6,3,3,3,2,2"; "" is the empty partition
Partition parse_partition(const std::string& s);

json to_json(const Partition& p);
json to_json(const DeltaColour& dc);
json to_json(const BlockLabel& b);
json to_json(const AbacusDisplay& d);
json to_json(const PairData& pd);
json to_json(const LoewyStructure& s);
json to_json(const Quiver& q);        // block as {prime,k,l,n} for hook cores
json to_json(const PlainGraph& g);

PlainGraph plain_graph_from_json(const json& j);

std::string to_dot(const Quiver& q);
std::string to_dot(const PlainGraph& g);

}  // namespace w2q

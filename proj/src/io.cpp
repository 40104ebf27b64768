#include "w2q/io.hpp"

#include <sstream>
#include <stdexcept>

namespace w2q {

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("parse_partition: bad part '" + item + "'");
        parts.push_back(v);
    }
    return Partition{parts};
}

json to_json(const Partition& p) { return json(p.parts()); }

static std::string colour_name(Colour c) { return c == Colour::Black ? "black" : "white"; }

json to_json(const DeltaColour& dc) {
    json j;
    j["delta"] = dc.delta;
    j["colour"] = dc.colour ? json(colour_name(*dc.colour)) : json(nullptr);
    return j;
}

json to_json(const BlockLabel& b) {
    json j;
    j["prime"] = b.prime;
    j["core"] = to_json(b.core);
    j["weight"] = b.weight;
    j["n"] = b.n();
    return j;
}

json to_json(const AbacusDisplay& d) {
    json j;
    j["prime"] = d.prime;
    j["bead_count"] = d.bead_count;
    j["beads"] = d.beads;
    return j;
}

json to_json(const PairData& pd) {
    json j;
    j["upper"] = to_json(pd.upper);
    j["lower"] = to_json(pd.lower);
    j["bead_count"] = pd.bead_count;
    j["runner"] = pd.runner;
    j["alpha"] = to_json(pd.alpha);
    j["beta"] = to_json(pd.beta);
    j["gamma"] = to_json(pd.gamma);
    j["alpha_bar"] = to_json(pd.alpha_bar);
    j["beta_bar"] = to_json(pd.beta_bar);
    j["gamma_bar"] = to_json(pd.gamma_bar);
    j["l1"] = pd.l1;
    j["l2"] = pd.l2;
    j["r1"] = pd.r1;
    j["r2"] = pd.r2;
    j["d"] = pd.d();
    j["case"] = pd.case_no;
    return j;
}

json to_json(const LoewyStructure& s) {
    json layers = json::array();
    for (const auto& layer : s.layers) {
        json row = json::array();
        for (const Partition& p : layer) row.push_back(to_json(p));
        layers.push_back(row);
    }
    return layers;
}

json to_json(const Quiver& q) {
    json j;
    json block;
    block["prime"] = q.block.prime;
    // hook coordinates of the core
    const Partition& core = q.block.core;
    bool hook = core.empty() || core.part(1) <= 1;
    if (!hook) throw std::invalid_argument("to_json(Quiver): block core is not a hook");
    block["k"] = core.part(0);
    block["l"] = core.empty() ? 0 : core.length() - 1;
    block["n"] = q.block.n();
    j["block"] = block;
    json verts = json::array();
    for (const QuiverVertex& v : q.vertices) {
        json jv;
        jv["partition"] = to_json(v.partition);
        jv["delta"] = v.delta;
        jv["colour"] = v.colour ? json(colour_name(*v.colour)) : json(nullptr);
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (const auto& [a, b] : q.edges) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    return j;
}

json to_json(const PlainGraph& g) {
    json j;
    j["vertex_count"] = g.vertex_count;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    if (!g.row.empty()) j["rows"] = g.row;
    return j;
}

PlainGraph plain_graph_from_json(const json& j) {
    PlainGraph g;
    g.vertex_count = j.at("vertex_count").get<int>();
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("rows")) g.row = j.at("rows").get<std::vector<int>>();
    return g;
}

std::string to_dot(const Quiver& q) {
    std::ostringstream os;
    os << "graph quiver {\n  rankdir=TB;\n  node [shape=box];\n";
    std::vector<int> sizes = q.row_sizes();
    size_t v = 0;
    for (size_t r = 0; r < sizes.size(); ++r) {
        os << "  { rank=same;";
        for (int c = 0; c < sizes[r]; ++c, ++v) {
            const QuiverVertex& vert = q.vertices[v];
            os << " v" << v << " [label=\"" << vert.partition.to_string();
            if (vert.colour) os << (vert.colour == Colour::Black ? " b" : " w");
            os << "\"];";
        }
        os << " }\n";
    }
    for (const auto& [a, b] : q.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const PlainGraph& g) {
    std::ostringstream os;
    os << "graph refquiver {\n  rankdir=TB;\n";
    if (!g.row.empty()) {
        int maxrow = 0;
        for (int r : g.row) maxrow = std::max(maxrow, r);
        for (int r = 0; r <= maxrow; ++r) {
            os << "  { rank=same;";
            for (int v = 0; v < g.vertex_count; ++v)
                if (g.row[static_cast<size_t>(v)] == r) os << " v" << v << ";";
            os << " }\n";
        }
    }
    for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace w2q

#include "w2q/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace w2q {

void PlainGraph::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("PlainGraph: loop edge");
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
        throw std::invalid_argument("PlainGraph: vertex out of range");
    edges.insert({std::min(a, b), std::max(a, b)});
}

std::vector<std::vector<int>> PlainGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count));
    for (const auto& [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

PlainGraph underlying_graph(const Quiver& q) {
    PlainGraph g;
    g.vertex_count = static_cast<int>(q.vertices.size());
    g.edges = q.edges;
    g.row.reserve(q.vertices.size());
    for (const QuiverVertex& v : q.vertices) g.row.push_back(v.delta);
    return g;
}

namespace {

bool verified(const PlainGraph& g, const PlainGraph& h, const std::vector<int>& map) {
    if (g.edges.size() != h.edges.size()) return false;
    for (const auto& [a, b] : g.edges) {
        int x = map[static_cast<size_t>(a)], y = map[static_cast<size_t>(b)];
        if (!h.edges.count({std::min(x, y), std::max(x, y)})) return false;
    }
    return true;
}

/* Joint colour refinement: colours are shared between both graphs so that
 * classes are comparable. Returns false when the class histograms split.
 */
bool refine(const std::vector<std::vector<int>>& adj_g, const std::vector<std::vector<int>>& adj_h,
            std::vector<int>& col_g, std::vector<int>& col_h) {
    size_t n = col_g.size();
    for (int round = 0; round < static_cast<int>(2 * n) + 2; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next;
        auto signature = [&](const std::vector<std::vector<int>>& adj, const std::vector<int>& col,
                             size_t v) {
            std::vector<int> sig;
            for (int w : adj[v]) sig.push_back(col[static_cast<size_t>(w)]);
            std::sort(sig.begin(), sig.end());
            return std::pair<int, std::vector<int>>{col[v], std::move(sig)};
        };
        std::vector<int> ng(n), nh(n);
        for (size_t v = 0; v < n; ++v) {
            auto key = signature(adj_g, col_g, v);
            auto it = next.find(key);
            if (it == next.end()) it = next.emplace(std::move(key), static_cast<int>(next.size())).first;
            ng[v] = it->second;
        }
        for (size_t v = 0; v < n; ++v) {
            auto key = signature(adj_h, col_h, v);
            auto it = next.find(key);
            if (it == next.end()) return false;  // a class with no counterpart
            nh[v] = it->second;
        }
        std::map<int, int> cg, ch;
        for (size_t v = 0; v < n; ++v) {
            cg[ng[v]]++;
            ch[nh[v]]++;
        }
        if (cg != ch) return false;
        bool stable = (ng == col_g);
        col_g = std::move(ng);
        col_h = std::move(nh);
        if (stable) return true;
    }
    return true;
}

bool iso_search(const PlainGraph& g, const PlainGraph& h,
                const std::vector<std::vector<int>>& adj_g, const std::vector<std::vector<int>>& adj_h,
                std::vector<int> col_g, std::vector<int> col_h, std::vector<int>& out) {
    if (!refine(adj_g, adj_h, col_g, col_h)) return false;
    size_t n = col_g.size();
    // smallest class with more than one member
    int target = -1, best_size = -1;
    std::map<int, int> count;
    for (size_t v = 0; v < n; ++v) count[col_g[v]]++;
    for (const auto& [c, sz] : count) {
        if (sz > 1 && (best_size < 0 || sz < best_size)) {
            target = c;
            best_size = sz;
        }
    }
    if (target < 0) {  // discrete: read the map off
        std::vector<int> map(n, -1);
        std::map<int, int> where;
        for (size_t v = 0; v < n; ++v) where[col_h[v]] = static_cast<int>(v);
        for (size_t v = 0; v < n; ++v) {
            auto it = where.find(col_g[v]);
            if (it == where.end()) return false;
            map[v] = it->second;
        }
        if (!verified(g, h, map)) return false;  // refinement-discrete but not an isomorphism
        out = std::move(map);
        return true;
    }
    size_t gv = 0;
    while (col_g[gv] != target) ++gv;
    int fresh = static_cast<int>(2 * n) + 7;
    for (size_t hv = 0; hv < n; ++hv) {
        if (col_h[hv] != target) continue;
        std::vector<int> cg = col_g, ch = col_h;
        cg[gv] = fresh;
        ch[hv] = fresh;
        if (iso_search(g, h, adj_g, adj_h, std::move(cg), std::move(ch), out)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> iso(const PlainGraph& g, const PlainGraph& h) {
    if (g.vertex_count != h.vertex_count || g.edges.size() != h.edges.size()) return std::nullopt;
    auto adj_g = g.adjacency(), adj_h = h.adjacency();
    std::vector<int> col_g(static_cast<size_t>(g.vertex_count), 0);
    std::vector<int> col_h(static_cast<size_t>(h.vertex_count), 0);
    std::vector<int> map;
    if (!iso_search(g, h, adj_g, adj_h, std::move(col_g), std::move(col_h), map)) return std::nullopt;
    if (!verified(g, h, map)) throw std::logic_error("iso: produced map failed verification");
    return map;
}

std::optional<std::vector<int>> iso_naive(const PlainGraph& g, const PlainGraph& h) {
    if (g.vertex_count != h.vertex_count || g.edges.size() != h.edges.size()) return std::nullopt;
    size_t n = static_cast<size_t>(g.vertex_count);
    auto adj_g = g.adjacency(), adj_h = h.adjacency();
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, size_t v) -> bool {
        if (v == n) return true;
        for (size_t w = 0; w < n; ++w) {
            if (used[w] || adj_g[v].size() != adj_h[w].size()) continue;
            bool ok = true;
            // adjacency with every already-mapped vertex must match exactly
            for (size_t u = 0; u < v && ok; ++u) {
                bool eg = std::binary_search(adj_g[v].begin(), adj_g[v].end(), static_cast<int>(u));
                bool eh = std::binary_search(adj_h[w].begin(), adj_h[w].end(), map[u]);
                if (eg != eh) ok = false;
            }
            if (!ok) continue;
            used[w] = true;
            map[v] = static_cast<int>(w);
            if (self(self, v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    if (!verified(g, h, map)) throw std::logic_error("iso_naive: produced map failed verification");
    return map;
}

namespace {

std::vector<int> distances_from(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> bfs;
    dist[static_cast<size_t>(start)] = 0;
    bfs.push(start);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[static_cast<size_t>(v)]) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                bfs.push(w);
            }
        }
    }
    return dist;
}

std::string classify_component(const std::vector<int>& verts,
                               const std::vector<std::vector<int>>& adj) {
    // adj here is the boundary-subgraph adjacency, restricted on the fly
    size_t m = verts.size();
    if (m == 1) return "vertex";
    std::vector<int> degs;
    int deg3 = -1, deg3_count = 0, maxdeg = 0;
    for (int v : verts) {
        int d = static_cast<int>(adj[static_cast<size_t>(v)].size());
        degs.push_back(d);
        maxdeg = std::max(maxdeg, d);
        if (d >= 3) {
            deg3 = v;
            deg3_count++;
        }
    }
    size_t edge_count = 0;
    for (int v : verts) edge_count += adj[static_cast<size_t>(v)].size();
    edge_count /= 2;
    bool tree = edge_count == m - 1;
    if (tree && maxdeg <= 2) return "path:" + std::to_string(m);
    if (tree && deg3_count == 1 && maxdeg == 3) {
        // three arms hanging off the single branch vertex
        std::vector<int> arms;
        for (int w : adj[static_cast<size_t>(deg3)]) {
            int len = 1, prev = deg3, cur = w;
            while (adj[static_cast<size_t>(cur)].size() == 2) {
                int next = adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                                    : adj[static_cast<size_t>(cur)][0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        std::string s = "arms:";
        for (size_t i = 0; i < arms.size(); ++i) s += (i ? "," : "") + std::to_string(arms[i]);
        return s;
    }
    // fall back to an order/degree invariant
    std::sort(degs.begin(), degs.end());
    std::string s = "other:" + std::to_string(m) + ";" + std::to_string(edge_count) + ";";
    for (size_t i = 0; i < degs.size(); ++i) s += (i ? "," : "") + std::to_string(degs[i]);
    return s;
}

}  // namespace

BoundaryProfile boundary_profile(const PlainGraph& g) {
    BoundaryProfile prof;
    auto adj = g.adjacency();
    size_t n = static_cast<size_t>(g.vertex_count);
    std::set<int> exceptional_vertices;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (adj[static_cast<size_t>(v)].size() > 2) continue;
        auto dist = distances_from(adj, v);
        for (int w = v + 1; w < g.vertex_count; ++w) {
            if (adj[static_cast<size_t>(w)].size() > 2) continue;
            if (dist[static_cast<size_t>(w)] == 2) {
                prof.exceptional_pairs.push_back({v, w});
                exceptional_vertices.insert(v);
                exceptional_vertices.insert(w);
            }
        }
    }
    prof.exceptional_pair_count = static_cast<int>(prof.exceptional_pairs.size());
    prof.exceptional_vertex_count = static_cast<int>(exceptional_vertices.size());

    // induced subgraph on vertices of full valency <= 3
    std::vector<bool> in_boundary(n, false);
    for (size_t v = 0; v < n; ++v) in_boundary[v] = adj[v].size() <= 3;
    std::vector<std::vector<int>> badj(n);
    for (const auto& [a, b] : g.edges)
        if (in_boundary[static_cast<size_t>(a)] && in_boundary[static_cast<size_t>(b)]) {
            badj[static_cast<size_t>(a)].push_back(b);
            badj[static_cast<size_t>(b)].push_back(a);
        }
    for (auto& v : badj) std::sort(v.begin(), v.end());
    std::vector<bool> seen(n, false);
    for (size_t v = 0; v < n; ++v) {
        if (!in_boundary[v] || seen[v]) continue;
        std::vector<int> comp;
        std::queue<int> bfs;
        bfs.push(static_cast<int>(v));
        seen[v] = true;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            comp.push_back(x);
            for (int w : badj[static_cast<size_t>(x)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    bfs.push(w);
                }
        }
        prof.components.push_back(classify_component(comp, badj));
    }
    std::sort(prof.components.begin(), prof.components.end());
    return prof;
}

std::string BoundaryProfile::to_string() const {
    std::string s = "pairs=" + std::to_string(exceptional_pair_count) +
                    " shared_vertices=" + std::to_string(exceptional_vertex_count) + " [";
    for (size_t i = 0; i < components.size(); ++i) s += (i ? " | " : "") + components[i];
    return s + "]";
}

}  // namespace w2q

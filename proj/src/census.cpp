#include "w2q/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace w2q {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

std::pair<int, int> conjugate_hook(std::pair<int, int> kl) {
    if (kl == std::pair<int, int>{0, 0}) return kl;
    return {kl.second + 1, kl.first - 1};  // (k,1^l)' = (l+1,1^(k-1))
}

}  // namespace

std::vector<std::pair<int, int>> morita_census(int prime) {
    if (prime < 3) throw std::invalid_argument("morita_census: prime must be >= 3");
    std::vector<std::pair<int, int>> hooks;
    for (int k = 0; k <= prime; ++k)
        for (int l = 0; l <= prime - 1; ++l)
            if (hook_core(prime, k, l)) hooks.push_back({k, l});
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < hooks.size(); ++i) index[hooks[i]] = static_cast<int>(i);

    UnionFind uf(hooks.size());
    for (const auto& kl : hooks) {
        uf.unite(index.at(kl), index.at(conjugate_hook(kl)));
        if (kl.first + kl.second == prime - 1) {
            std::pair<int, int> up{kl.first + 1, kl.second + 1};  // the Scopes (2:2) bridge
            uf.unite(index.at(kl), index.at(up));
        }
    }

    auto is_representative = [&](std::pair<int, int> kl) {
        auto [k, l] = kl;
        int s = k + l;
        if (k == 0 && l == 0) return true;
        return k > l && ((s >= 1 && s <= prime - 1) || (s > prime + 1 && s <= 2 * prime - 1));
    };
    std::map<int, std::vector<std::pair<int, int>>> classes;
    for (const auto& kl : hooks) classes[uf.find(index.at(kl))].push_back(kl);
    std::vector<std::pair<int, int>> reps;
    for (const auto& [root, members] : classes) {
        (void)root;
        std::vector<std::pair<int, int>> found;
        for (const auto& kl : members)
            if (is_representative(kl)) found.push_back(kl);
        if (found.size() != 1)
            throw std::logic_error("morita_census: representative selection is not unique");
        reps.push_back(found.front());
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::map<Partition, Quiver> p3_fixtures() {
    struct Fixture {
        int k, l;
        std::vector<int> row_sizes;
        std::vector<Colour> top_colours;
        std::vector<std::array<int, 4>> edges;  // (row a, pos a, row b, pos b)
    };
    // transcribed pictures; rows are delta values, positions lex descending
    const std::vector<Fixture> fixtures = {
        {0, 0, {2, 2, 1}, {Colour::Black, Colour::White},
         {{0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 2, 0}, {1, 1, 2, 0}}},
        {1, 0, {2, 3}, {Colour::Black, Colour::White},
         {{0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 1, 2}, {0, 1, 1, 0}, {0, 1, 1, 1}, {0, 1, 1, 2}}},
        {2, 0, {3, 2}, {Colour::Black, Colour::White, Colour::White},
         {{0, 0, 1, 0}, {0, 1, 1, 0}, {0, 2, 1, 0}, {0, 2, 1, 1}, {0, 0, 1, 1}}},
        {1, 1, {3, 2}, {Colour::Black, Colour::White, Colour::Black},
         {{0, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 1, 1, 1}, {0, 2, 1, 1}}},
        {3, 2, {4, 1}, {Colour::Black, Colour::White, Colour::White, Colour::Black},
         {{0, 0, 1, 0}, {0, 1, 1, 0}, {0, 2, 1, 0}, {0, 3, 1, 0}}},
    };

    std::map<Partition, Quiver> out;
    for (const Fixture& f : fixtures) {
        BlockLabel block = *hook_core(3, f.k, f.l);
        Quiver q;
        q.block = block;
        q.vertices = block_vertices(block);
        std::vector<int> sizes = q.row_sizes();
        if (sizes != f.row_sizes)
            throw std::logic_error("p3_fixtures: drawn row sizes disagree with the block");
        // index of the vertex at (row, pos): rows are contiguous in sorted order
        auto at = [&](int row, int pos) {
            int base = 0;
            for (int r = 0; r < row; ++r) base += sizes[static_cast<size_t>(r)];
            if (pos >= sizes[static_cast<size_t>(row)])
                throw std::logic_error("p3_fixtures: position out of range");
            return base + pos;
        };
        for (size_t c = 0; c < f.top_colours.size(); ++c) {
            if (q.vertices[c].colour != f.top_colours[c])
                throw std::logic_error("p3_fixtures: drawn colour disagrees with delta()");
        }
        for (const auto& e : f.edges) q.add_edge(at(e[0], e[1]), at(e[2], e[3]));
        out[block.core] = q;
    }
    return out;
}

}  // namespace w2q

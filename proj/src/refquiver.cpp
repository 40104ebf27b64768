#include "w2q/refquiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace w2q {

namespace {

/* Mutable board: rows of stable vertex ids, edges on ids. Row 0 is the top;
 * positions run lexicographically from the left within a row.
 */
struct Board {
    std::vector<std::vector<int>> rows;
    std::set<std::pair<int, int>> edges;
    int next_id = 0;

    int fresh() { return next_id++; }
    void link(int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); }

    void remove(int r, int pos) {
        int id = rows[static_cast<size_t>(r)][static_cast<size_t>(pos)];
        rows[static_cast<size_t>(r)].erase(rows[static_cast<size_t>(r)].begin() + pos);
        for (auto it = edges.begin(); it != edges.end();) {
            if (it->first == id || it->second == id) it = edges.erase(it);
            else ++it;
        }
    }

    int insert(int r, int pos) {
        int id = fresh();
        rows[static_cast<size_t>(r)].insert(rows[static_cast<size_t>(r)].begin() + pos, id);
        return id;
    }

    // positions in row r-1 adjacent to the vertex at (r, pos), ascending
    std::vector<int> up_neighbours(int r, int pos) const {
        int id = rows[static_cast<size_t>(r)][static_cast<size_t>(pos)];
        std::vector<int> out;
        const auto& above = rows[static_cast<size_t>(r - 1)];
        for (size_t c = 0; c < above.size(); ++c) {
            int other = above[c];
            if (edges.count({std::min(id, other), std::max(id, other)}))
                out.push_back(static_cast<int>(c));
        }
        return out;
    }

    int at(int r, int pos) const { return rows[static_cast<size_t>(r)][static_cast<size_t>(pos)]; }
    int last(int r) const { return static_cast<int>(rows[static_cast<size_t>(r)].size()) - 1; }
};

Board base_board(int n) {
    Board b;
    b.rows.resize(static_cast<size_t>(n));
    auto size_of = [&](int r) { return r <= 1 ? n - 1 : n - r; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < size_of(r); ++c) b.rows[static_cast<size_t>(r)].push_back(b.fresh());
    // top two rows: verticals and both diagonals
    for (int c = 0; c < n - 1; ++c) b.link(b.at(0, c), b.at(1, c));
    for (int c = 0; c + 1 < n - 1; ++c) {
        b.link(b.at(0, c), b.at(1, c + 1));
        b.link(b.at(0, c + 1), b.at(1, c));
    }
    // below: verticals and the north-west diagonal
    for (int r = 1; r + 1 < n; ++r)
        for (int c = 0; c < size_of(r + 1); ++c) {
            b.link(b.at(r, c), b.at(r + 1, c));
            b.link(b.at(r, c + 1), b.at(r + 1, c));
        }
    return b;
}

/* One left-rim step. The doomed vertex is the head of row n-i; the inserted
 * vertex lands at position 1 of the row above, joined to the surviving head
 * of the shortened row and to the up-neighbours of the second vertex of its
 * row except the rightmost (all of them when that row is row 0, which cannot
 * happen here: the step above row 1 is the special final one).
 */
void left_step(Board& b, int n, int step) {
    int brow = n - step;       // row of the removed vertex
    int arow = brow - 1;       // row of the inserted vertex
    auto up = b.up_neighbours(brow, 0);
    if (up.size() != 2 || up[0] != 0 || up[1] != 1)
        throw std::logic_error("gen_ref_quiver: unexpected left-rim attachment");

    std::vector<int> y_ids;
    if (step == n - 1) {
        // final step: the inserted vertex joins only the shortened row's head
    } else {
        auto w = b.up_neighbours(arow, 1);  // attachments of the (arow,1) vertex one row higher
        if (w.size() < 2) throw std::logic_error("gen_ref_quiver: left-rim feeder too small");
        w.pop_back();  // drop the rightmost: it lies lexicographically below
        for (int c : w) y_ids.push_back(b.at(arow - 1, c));
    }
    b.remove(brow, 0);
    int alpha = b.insert(arow, 1);
    for (int id : y_ids) b.link(alpha, id);
    if (step == 1) {
        // bottom row became empty and disappears
        if (!b.rows.back().empty()) throw std::logic_error("gen_ref_quiver: bottom row not consumed");
        b.rows.pop_back();
    } else {
        b.link(alpha, b.at(brow, 0));
    }
}

/* One right-rim step, the mirror surgery at the tails of rows n-1-step and
 * n-2-step; at step n-2 the removed vertex sits in row 1 and the inserted
 * vertex is appended to row 0 with a single edge.
 */
void right_step(Board& b, int n, int step) {
    int brow = n - 1 - step;
    int arow = brow - 1;
    if (step == n - 2) {
        b.remove(brow, b.last(brow));
        int alpha = b.insert(arow, b.last(arow) + 1);
        b.link(alpha, b.at(brow, b.last(brow)));
        return;
    }
    auto up = b.up_neighbours(brow, b.last(brow));
    if (static_cast<int>(up.size()) != 2 || up[1] != b.last(arow) || up[0] != b.last(arow) - 1)
        throw std::logic_error("gen_ref_quiver: unexpected right-rim attachment");

    auto w = b.up_neighbours(arow, b.last(arow));
    if (w.empty()) throw std::logic_error("gen_ref_quiver: right-rim feeder too small");
    if (arow - 1 > 0) w.pop_back();  // keep all attachments only at the top row
    std::vector<int> y_ids;
    for (int c : w) y_ids.push_back(b.at(arow - 1, c));

    b.remove(brow, b.last(brow));
    int alpha = b.insert(arow, b.last(arow));  // just before the tail vertex
    for (int id : y_ids) b.link(alpha, id);
    b.link(alpha, b.at(brow, b.last(brow)));
}

}  // namespace

PlainGraph gen_ref_quiver(const RefQuiverParams& params) {
    int n = params.n, i = params.i, j = params.j;
    if (n < 5) throw std::invalid_argument("gen_ref_quiver: n must be >= 5");
    bool ok = (i == 0 && j == 0) || (i >= 1 && i <= n - 1 && j >= 0 && j <= n - 2);
    if (!ok) throw std::invalid_argument("gen_ref_quiver: parameters out of range");

    Board b = base_board(n);
    for (int step = 1; step <= i; ++step) left_step(b, n, step);
    for (int step = 1; step <= j; ++step) right_step(b, n, step);

    // number the vertices row-major
    PlainGraph g;
    std::vector<int> where(static_cast<size_t>(b.next_id), -1);
    for (size_t r = 0; r < b.rows.size(); ++r)
        for (int id : b.rows[r]) {
            where[static_cast<size_t>(id)] = g.vertex_count++;
            g.row.push_back(static_cast<int>(r));
        }
    for (const auto& [a, c] : b.edges)
        g.add_edge(where[static_cast<size_t>(a)], where[static_cast<size_t>(c)]);
    return g;
}

}  // namespace w2q

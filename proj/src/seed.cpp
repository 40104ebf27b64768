#include "w2q/seed.hpp"

#include <algorithm>
#include <stdexcept>

namespace w2q {

namespace {

// <j,i> label shorthand: i == 0 encodes <j>, j == i encodes <i,i>
struct Lbl {
    int j = 0, i = 0;
};
Lbl one(int j) { return {j, 0}; }
Lbl two(int j, int i) { return {j, i}; }

Partition lbl_partition(int p, const Lbl& l) {
    // two beads per runner; runner r occupies positions r-1 and p+r-1
    std::vector<int> beads(static_cast<size_t>(2 * p));
    for (int q = 0; q < 2 * p; ++q) beads[static_cast<size_t>(q)] = q;
    auto move_down = [&](int from, int steps) {
        auto it = std::find(beads.begin(), beads.end(), from);
        if (it == beads.end()) throw std::logic_error("lbl_partition: bead missing");
        *it += steps * p;
    };
    if (l.i == 0) {
        move_down(p + l.j - 1, 2);  // <j>
    } else if (l.i == l.j) {
        move_down(l.j - 1, 2);  // <i,i>: both beads of the runner one step down
    } else {
        move_down(p + l.j - 1, 1);
        move_down(p + l.i - 1, 1);
    }
    std::sort(beads.begin(), beads.end());
    return to_partition(AbacusDisplay{p, 2 * p, std::move(beads)});
}

std::vector<Partition> lbls(int p, std::initializer_list<Lbl> ls) {
    std::vector<Partition> out;
    for (const Lbl& l : ls) out.push_back(lbl_partition(p, l));
    return out;
}

LoewyStructure lbl_layers(int p, std::initializer_list<std::initializer_list<Lbl>> rows) {
    LoewyStructure s;
    for (const auto& row : rows) {
        std::vector<Partition> layer = lbls(p, row);
        std::sort(layer.begin(), layer.end(), std::greater<>());
        s.layers.push_back(std::move(layer));
    }
    return s;
}

}  // namespace

Partition seed_label_partition(int prime, const Weight2Label& label) {
    switch (label.kind) {
        case Weight2Label::Kind::SingleDouble: return lbl_partition(prime, one(label.hi));
        case Weight2Label::Kind::SameRunner: return lbl_partition(prime, two(label.hi, label.hi));
        case Weight2Label::Kind::TwoRunners: return lbl_partition(prime, two(label.hi, label.lo));
    }
    throw std::invalid_argument("seed_label_partition: bad label");
}

std::vector<ProjectiveColumn> projective_columns(int prime) {
    if (prime < 5) throw std::invalid_argument("projective_columns: prime must be >= 5");
    int p = prime;
    std::vector<ProjectiveColumn> cols;
    auto col = [&](Lbl label, std::initializer_list<Lbl> factors) {
        cols.push_back({lbl_partition(p, label), lbls(p, factors)});
    };
    // induced from the weight-0 block
    col(one(1), {one(1), two(p, 1), two(p, p)});
    // induced from the weight-1 blocks
    col(one(p), {one(p), one(p - 1), two(p, p - 2), two(p - 1, p - 2)});
    for (int s = 2; s <= p - 1; ++s) col(one(s), {one(s), one(s - 1), two(p, s), two(p, s - 1)});
    for (int s = 3; s <= p; ++s)
        col(two(s, 1), {two(s, 1), two(s - 1, 1), two(s, s), two(s - 1, s - 1)});
    for (int s = 3; s <= p - 1; ++s)
        col(two(s + 1, s), {two(s + 1, s), two(s + 1, s - 1), two(s, s - 2), two(s - 1, s - 2)});
    col(two(3, 2), {two(3, 2), two(3, 1), two(2, 2), two(1, 1)});
    for (int r = 4; r <= p; ++r)
        for (int s = 2; s <= r - 2; ++s)
            col(two(r, s), {two(r, s), two(r - 1, s), two(r, s - 1), two(r - 1, s - 1)});

    if (static_cast<int>(cols.size()) != (p + 1) * p / 2 - 1)
        throw std::logic_error("projective_columns: wrong column count");
    for (const auto& c : cols)
        for (const Partition& f : c.specht_factors)
            if (f > c.label) throw std::logic_error("projective_columns: label is not maximal");
    std::sort(cols.begin(), cols.end(),
              [](const ProjectiveColumn& a, const ProjectiveColumn& b) { return a.label > b.label; });
    return cols;
}

std::map<Partition, LoewyStructure> specht_structures(int prime) {
    if (prime < 5) throw std::invalid_argument("specht_structures: prime must be >= 5");
    int p = prime;
    std::map<Partition, LoewyStructure> out;
    auto put = [&](Lbl label, std::initializer_list<std::initializer_list<Lbl>> rows) {
        out[lbl_partition(p, label)] = lbl_layers(p, rows);
    };

    // hook partitions of the block
    for (int i = 1; i <= p - 1; ++i) put(one(i), {{one(i)}, {one(i + 1)}});
    put(one(p), {{one(p)}});
    for (int i = 3; i <= p - 1; ++i) put(two(i, i), {{two(i, 1)}, {two(i + 1, 1)}});
    put(two(p, p), {{two(p, 1)}, {one(1)}});
    put(two(2, 2), {{two(3, 2)}, {two(3, 1)}});
    put(two(1, 1), {{two(3, 2)}});

    // <j,i> with j - i >= 3
    for (int j = 4; j <= p - 1; ++j)
        for (int i = 1; i <= j - 3; ++i)
            put(two(j, i), {{two(j, i)}, {two(j, i + 1), two(j + 1, i)}, {two(j + 1, i + 1)}});
    for (int i = 1; i <= p - 3; ++i)
        put(two(p, i), {{two(p, i)}, {two(p, i + 1), one(i)}, {one(i + 1)}});

    /* <j,i> with j - i = 2. For j < p the second layer is
     * <j,i+1>, <j+1,i>, <j+1,j> and the socle <j+1,i+1>; the j = p row is the
     * same under the wrap <p+1,x> -> <x>. (Forced by reciprocity against the
     * projective columns together with bipartiteness of the quiver.)
     */
    for (int j = 3; j <= p - 1; ++j) {
        int i = j - 2;
        put(two(j, i), {{two(j, i)}, {two(j, i + 1), two(j + 1, i), two(j + 1, j)}, {two(j + 1, i + 1)}});
    }
    put(two(p, p - 2), {{two(p, p - 2)}, {two(p, p - 1), one(p), one(p - 2)}, {one(p - 1)}});

    // <i+1,i>
    for (int i = 2; i <= p - 3; ++i)
        put(two(i + 1, i), {{two(i + 1, i)}, {two(i + 2, i)}, {two(i + 3, i + 2)}});
    put(two(p - 1, p - 2), {{two(p - 1, p - 2)}, {two(p, p - 2)}, {one(p)}});
    put(two(p, p - 1), {{two(p, p - 1)}, {one(p - 1)}});
    put(two(2, 1), {{two(3, 1)}, {two(4, 3)}});

    if (static_cast<int>(out.size()) != 2 * p + p * (p - 1) / 2)
        throw std::logic_error("specht_structures: wrong partition count");
    return out;
}

std::map<Partition, DeltaColour> delta_table(int prime) {
    if (prime < 5) throw std::invalid_argument("delta_table: prime must be >= 5");
    int p = prime;
    std::map<Partition, DeltaColour> out;
    auto put = [&](Lbl label, int d, std::optional<Colour> colour) {
        Partition part = lbl_partition(p, label);
        DeltaColour dc{d, colour};
        if (delta(part, p) != dc)
            throw std::logic_error("delta_table: closed form disagrees with delta()");
        out[part] = dc;
    };
    for (int i = 1; i <= p; ++i)
        put(one(i), p - i, i == p ? std::optional<Colour>{Colour::Black} : std::nullopt);
    for (int i = 1; i <= p; ++i)
        put(two(i, i), i - 1, i == 1 ? std::optional<Colour>{Colour::White} : std::nullopt);
    for (int j = 2; j <= p; ++j)
        for (int i = 1; i < j; ++i) {
            std::optional<Colour> colour;
            if (j == i + 1) colour = (i % 2 == 1) ? Colour::Black : Colour::White;
            put(two(j, i), j - i - 1, colour);
        }
    return out;
}

Quiver seed_quiver(int prime) {
    if (prime < 5) throw std::invalid_argument("seed_quiver: prime must be >= 5");
    BlockLabel block{prime, Partition{}, 2};
    Quiver q;
    q.block = block;
    q.vertices = block_vertices(block);
    auto structures = specht_structures(prime);

    /* lambda and mu in adjacent rows are joined iff the lex-smaller one's
     * Specht module has the lex-larger as a composition factor.
     */
    for (const auto& [mu, st] : structures) {
        if (!is_p_regular(mu, prime)) continue;
        int imu = q.index_of(mu);
        int dmu = q.vertices[static_cast<size_t>(imu)].delta;
        for (const auto& layer : st.layers)
            for (const Partition& lam : layer) {
                if (lam == mu) continue;
                if (lam < mu) throw std::logic_error("seed_quiver: factor below the head");
                int il = q.index_of(lam);
                int dl = q.vertices[static_cast<size_t>(il)].delta;
                if (dl == dmu + 1 || dl == dmu - 1) q.add_edge(imu, il);
            }
    }
    return q;
}

}  // namespace w2q

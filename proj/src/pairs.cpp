#include "w2q/pairs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace w2q {

std::vector<std::pair<int, BlockLabel>> find_pairs(const BlockLabel& b) {
    int p = b.prime;
    int t0 = std::max(b.core.length(), 1);
    std::set<std::pair<int, Partition>> seen;
    for (int t = t0; t < t0 + p; ++t) {
        AbacusDisplay core = display(b.core, p, t);
        std::vector<int> counts = runner_counts(core);
        for (int i = 2; i <= p; ++i) {
            int k = counts[static_cast<size_t>(i - 1)] - counts[static_cast<size_t>(i - 2)];
            if (k > 0) seen.insert({k, to_partition(swap_runners(core, i))});
        }
    }
    std::vector<std::pair<int, BlockLabel>> out;
    for (const auto& [k, core] : seen) out.push_back({k, BlockLabel{p, core, b.weight}});
    return out;
}

namespace {

struct PairGeometry {
    int t = 0;       // shared bead count
    int i = 0;       // runner, 2..p
    int b = 0;       // beads on runner i-1 of the upper core display
    AbacusDisplay upper_core;
};

/* Find the smallest display size showing the two cores as an adjacent-runner
 * swap with gap k. Hits where runner i-1 carries no bead are rejected: the
 * exceptional constellations need rows b-1, b, b+1 of the runner pair.
 */
PairGeometry find_geometry(const BlockLabel& upper, const BlockLabel& lower, int k,
                           int min_bead_count) {
    if (upper.prime != lower.prime || upper.weight != lower.weight)
        throw std::invalid_argument("pair: blocks must share prime and weight");
    if (upper.n() != lower.n() + k) throw std::invalid_argument("pair: |upper| must be |lower| + k");
    int p = upper.prime;
    int t0 = std::max({upper.core.length(), lower.core.length(), 1, min_bead_count});
    for (int t = t0; t <= t0 + 3 * p; ++t) {
        AbacusDisplay core = display(upper.core, p, t);
        std::vector<int> counts = runner_counts(core);
        for (int i = 2; i <= p; ++i) {
            if (counts[static_cast<size_t>(i - 1)] - counts[static_cast<size_t>(i - 2)] != k) continue;
            if (to_partition(swap_runners(core, i)) != lower.core) continue;
            int b = counts[static_cast<size_t>(i - 2)];
            if (b < 1) continue;
            return {t, i, b, core};
        }
    }
    throw std::invalid_argument("pair: blocks do not form the requested pair");
}

/* Bead set with runners i, i-1 replaced by prescribed row sets; all other
 * runners keep the core configuration.
 */
Partition from_rows(const PairGeometry& g, int prime,
                    const std::vector<int>& rows_im1, const std::vector<int>& rows_i) {
    std::vector<int> beads;
    for (int q : g.upper_core.beads) {
        int r = q % prime + 1;
        if (r != g.i && r != g.i - 1) beads.push_back(q);
    }
    for (int row : rows_im1) beads.push_back(row * prime + g.i - 2);
    for (int row : rows_i) beads.push_back(row * prime + g.i - 1);
    std::sort(beads.begin(), beads.end());
    AbacusDisplay d{prime, g.t, std::move(beads)};
    return to_partition(d);
}

std::vector<int> packed(int count) {
    std::vector<int> rows(static_cast<size_t>(count));
    for (int r = 0; r < count; ++r) rows[static_cast<size_t>(r)] = r;
    return rows;
}

std::vector<int> packed_except_last_at(int count, int last_row) {
    std::vector<int> rows = packed(count - 1);
    rows.push_back(last_row);
    return rows;
}

}  // namespace

PairData make_pair_data(const BlockLabel& upper, const BlockLabel& lower, int min_bead_count) {
    if (upper.weight != 2) throw std::invalid_argument("make_pair_data: weight-2 blocks only");
    PairGeometry g = find_geometry(upper, lower, 1, min_bead_count);
    int p = upper.prime;
    int b = g.b;

    PairData pd;
    pd.upper = upper;
    pd.lower = lower;
    pd.bead_count = g.t;
    pd.runner = g.i;

    /* Occupancy of runners i-1 (b beads in the upper core) and i (b+1 beads)
     * in rows b-1, b, b+1; all higher rows full, all lower rows empty.
     * Upper block:   alpha = <i,i>, beta = <i,i-1>, gamma = <i-1>.
     * Lower block:   alpha_bar = <i>, beta_bar = <i,i-1>, gamma_bar = <i-1,i-1>.
     */
    {
        std::vector<int> rows_i = packed(b - 1);  // two lowest beads of runner i moved down one
        rows_i.push_back(b);
        rows_i.push_back(b + 1);
        pd.alpha = from_rows(g, p, packed(b), rows_i);
    }
    {
        std::vector<int> rows_i = packed(b);  // lowest bead of runner i moved down one
        rows_i.push_back(b + 1);
        pd.beta = from_rows(g, p, packed_except_last_at(b, b), rows_i);
    }
    pd.gamma = from_rows(g, p, packed_except_last_at(b, b + 1), packed(b + 1));
    pd.alpha_bar = from_rows(g, p, packed(b + 1), packed_except_last_at(b, b + 1));
    pd.beta_bar = from_rows(g, p, packed_except_last_at(b + 1, b + 1), packed_except_last_at(b, b));
    {
        std::vector<int> rows_im1 = packed(b - 1);
        rows_im1.push_back(b);
        rows_im1.push_back(b + 1);
        pd.gamma_bar = from_rows(g, p, rows_im1, packed(b));
    }

    // segment counts over the other runners
    auto count_side = [&](int row, bool left) {
        int c = 0;
        for (int q : g.upper_core.beads) {
            if (q / p != row) continue;
            int r = q % p + 1;
            if (left ? (r < g.i - 1) : (r > g.i)) ++c;
        }
        return c;
    };
    pd.l1 = count_side(b, true);
    pd.r1 = count_side(b - 1, false);
    pd.l2 = count_side(b + 1, true);
    pd.r2 = count_side(b, false);
    if (pd.l1 < pd.l2 || pd.r1 < pd.r2)
        throw std::logic_error("make_pair_data: segment monotonicity violated");

    int s1 = pd.l1 + pd.r1, s2 = pd.l2 + pd.r2;
    if (s1 == 0 && s2 == 0) pd.case_no = 1;
    else if (s2 == 0 && s1 < p - 2) pd.case_no = 2;
    else if (s2 == 0 && s1 == p - 2) pd.case_no = 3;
    else if (s2 > 0 && s1 == p - 2 && s2 < p - 2) pd.case_no = 4;
    else if (s2 == p - 2 && s1 == p - 2) pd.case_no = 5;
    else if (s2 > 0 && s1 < p - 2) pd.case_no = 6;
    else throw std::logic_error("make_pair_data: unclassifiable segments");

    // alpha_bar > beta_bar > gamma_bar and alpha > beta > gamma, always
    if (!(pd.alpha_bar > pd.beta_bar && pd.beta_bar > pd.gamma_bar &&
          pd.alpha > pd.beta && pd.beta > pd.gamma))
        throw std::logic_error("make_pair_data: exceptional partitions out of order");
    return pd;
}

ScopesPair make_scopes_pair(const BlockLabel& upper, const BlockLabel& lower) {
    int k = upper.n() - lower.n();
    if (k < 2) throw std::invalid_argument("make_scopes_pair: not a (2:k>=2)-pair");
    PairGeometry g = find_geometry(upper, lower, k, 0);
    return {upper, lower, g.t, g.i, k};
}

namespace {

// swap runners i, i-1 on a display of lam with enough beads, t fixed mod p
Partition runner_swap_image(const Partition& lam, int prime, int t, int i) {
    int tt = t;
    while (tt < lam.length()) tt += prime;
    return to_partition(swap_runners(display(lam, prime, tt), i));
}

}  // namespace

Partition phi(const PairData& pd, const Partition& lam, Direction dir) {
    int p = pd.upper.prime;
    if (dir == Direction::Down) {
        if (lam == pd.alpha) throw std::invalid_argument("phi: alpha has no image");
        if (p_core_and_weight(lam, p).first != pd.upper.core)
            throw std::invalid_argument("phi: partition not in the upper block");
        if (lam == pd.beta) return pd.gamma_bar;
        if (lam == pd.gamma) return pd.beta_bar;
        return runner_swap_image(lam, p, pd.bead_count, pd.runner);
    }
    if (lam == pd.alpha_bar) throw std::invalid_argument("phi: alpha_bar has no image");
    if (p_core_and_weight(lam, p).first != pd.lower.core)
        throw std::invalid_argument("phi: partition not in the lower block");
    if (lam == pd.gamma_bar) return pd.beta;
    if (lam == pd.beta_bar) return pd.gamma;
    return runner_swap_image(lam, p, pd.bead_count, pd.runner);
}

Partition scopes_relabel(const ScopesPair& sp, const Partition& lam, Direction dir) {
    int p = sp.upper.prime;
    const BlockLabel& from = dir == Direction::Down ? sp.upper : sp.lower;
    if (p_core_and_weight(lam, p).first != from.core)
        throw std::invalid_argument("scopes_relabel: partition not in the source block");
    return runner_swap_image(lam, p, sp.bead_count, sp.runner);
}

std::vector<RegularityRow> regularity_profile(const PairData& pd) {
    int p = pd.upper.prime;
    auto row = [&](const Partition& part) {
        return RegularityRow{part, is_p_regular(part, p), is_p_restricted(part, p),
                             delta(part, p).delta};
    };
    std::vector<RegularityRow> rows{row(pd.alpha_bar), row(pd.beta_bar), row(pd.gamma_bar),
                                    row(pd.alpha), row(pd.beta), row(pd.gamma)};

    // expected table, indexed by case 1..6:
    //   regular / restricted flags for alpha_bar, beta_bar, gamma_bar, alpha, beta, gamma
    auto in = [&](std::initializer_list<int> cases) {
        return std::find(cases.begin(), cases.end(), pd.case_no) != cases.end();
    };
    const bool exp_reg[6] = {true,
                             in({1, 2, 3, 4, 6}),
                             in({1, 2, 6}),
                             true,
                             in({1, 2, 6}),
                             in({1, 2, 3, 4, 6})};
    const bool exp_res[6] = {in({4, 5, 6}),
                             in({2, 3, 4, 5, 6}),
                             true,
                             in({2, 3, 4, 5, 6}),
                             in({4, 5, 6}),
                             true};
    const int d = pd.d();
    const int exp_delta[6] = {d + 1, d, d + 1, d, d + 1, d};
    for (int j = 0; j < 6; ++j) {
        const RegularityRow& r = rows[static_cast<size_t>(j)];
        if (r.regular != exp_reg[j] || r.restricted != exp_res[j] || r.delta != exp_delta[j])
            throw std::logic_error("regularity_profile: computed profile contradicts the case table");
    }
    return rows;
}

std::vector<std::pair<int, int>> hook_scopes_classes(int prime) {
    if (prime < 3) throw std::invalid_argument("hook_scopes_classes: prime must be >= 3");
    std::vector<std::pair<int, int>> out;
    out.push_back({0, 0});
    for (int k = 1; k <= prime; ++k) {
        for (int l = 0; l <= prime - 1; ++l) {
            int s = k + l;
            if ((s >= 1 && s <= prime - 1) || (s >= prime + 2 && s <= 2 * prime - 1 && k < prime + 1))
                out.push_back({k, l});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace w2q

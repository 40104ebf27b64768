#include "w2q/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "w2q/seed.hpp"

namespace w2q {

int Quiver::index_of(const Partition& p) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].partition == p) return static_cast<int>(i);
    return -1;
}

bool Quiver::has_edge(const Partition& a, const Partition& b) const {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) return false;
    return edges.count({std::min(ia, ib), std::max(ia, ib)}) > 0;
}

std::vector<Partition> Quiver::neighbours(const Partition& p) const {
    int i = index_of(p);
    if (i < 0) throw std::invalid_argument("Quiver::neighbours: not a vertex");
    std::vector<Partition> out;
    for (const auto& [a, b] : edges) {
        if (a == i) out.push_back(vertices[static_cast<size_t>(b)].partition);
        if (b == i) out.push_back(vertices[static_cast<size_t>(a)].partition);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<int> Quiver::row_sizes() const {
    std::vector<int> sizes;
    for (const auto& v : vertices) {
        if (v.delta >= static_cast<int>(sizes.size())) sizes.resize(static_cast<size_t>(v.delta) + 1, 0);
        sizes[static_cast<size_t>(v.delta)]++;
    }
    return sizes;
}

void Quiver::add_edge(int a, int b) {
    if (a == b) throw std::logic_error("Quiver: loop edge");
    edges.insert({std::min(a, b), std::max(a, b)});
}

void Quiver::sort_vertices() {
    std::vector<int> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& va = vertices[static_cast<size_t>(a)];
        const auto& vb = vertices[static_cast<size_t>(b)];
        if (va.delta != vb.delta) return va.delta < vb.delta;
        return va.partition > vb.partition;
    });
    std::vector<int> where(vertices.size());
    std::vector<QuiverVertex> sorted;
    sorted.reserve(vertices.size());
    for (size_t i = 0; i < order.size(); ++i) {
        where[static_cast<size_t>(order[i])] = static_cast<int>(i);
        sorted.push_back(vertices[static_cast<size_t>(order[i])]);
    }
    std::set<std::pair<int, int>> remapped;
    for (const auto& [a, b] : edges) {
        int na = where[static_cast<size_t>(a)], nb = where[static_cast<size_t>(b)];
        remapped.insert({std::min(na, nb), std::max(na, nb)});
    }
    vertices = std::move(sorted);
    edges = std::move(remapped);
}

std::vector<QuiverVertex> block_vertices(const BlockLabel& b) {
    std::vector<QuiverVertex> out;
    for (const Partition& part : block_partitions(b)) {
        if (!is_p_regular(part, b.prime)) continue;
        DeltaColour dc = delta(part, b.prime);
        out.push_back({part, dc.delta, dc.colour});
    }
    std::sort(out.begin(), out.end(), [](const QuiverVertex& x, const QuiverVertex& y) {
        if (x.delta != y.delta) return x.delta < y.delta;
        return x.partition > y.partition;
    });
    return out;
}

namespace {

std::vector<Partition> sorted_desc(std::vector<Partition> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::vector<Partition> join(std::initializer_list<std::vector<Partition>> pieces) {
    std::vector<Partition> out;
    for (const auto& piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
    return sorted_desc(out);
}

std::vector<Partition> opt(const std::optional<Partition>& p) {
    return p ? std::vector<Partition>{*p} : std::vector<Partition>{};
}

LoewyStructure layers(std::initializer_list<std::vector<Partition>> ls) {
    LoewyStructure s;
    for (const auto& layer : ls)
        if (!layer.empty()) s.layers.push_back(layer);
    return s;
}

void check_delta_set(const std::vector<Partition>& set, int prime, int lo, int hi, const char* what) {
    for (const Partition& mu : set) {
        int dm = delta(mu, prime).delta;
        if (dm != lo && dm != hi)
            throw std::logic_error(std::string("extract_bar_data: delta constraint failed for ") + what);
    }
}

}  // namespace

ExceptionalStructures extract_bar_data(const Quiver& q_bar, const PairData& pd, bool hook_mode) {
    if (q_bar.block != pd.lower)
        throw std::invalid_argument("extract_bar_data: quiver does not belong to the lower block");
    int p = pd.upper.prime;
    int d = pd.d();
    ExceptionalStructures es;
    es.pair = pd;

    if (is_p_restricted(pd.beta_bar, p)) es.beta_bar_plus = lambda_plus(pd.beta_bar, p);
    if (is_p_restricted(pd.alpha_bar, p)) es.alpha_bar_plus = lambda_plus(pd.alpha_bar, p);
    if (is_p_restricted(pd.alpha, p)) es.alpha_plus = lambda_plus(pd.alpha, p);
    if (is_p_restricted(pd.beta, p)) es.beta_plus = lambda_plus(pd.beta, p);

    // the lambda_plus companions pair up across Phi
    if (es.beta_bar_plus.has_value() != es.alpha_plus.has_value() ||
        es.alpha_bar_plus.has_value() != es.beta_plus.has_value())
        throw std::logic_error("extract_bar_data: lambda_plus existence mismatch across the pair");
    if (es.beta_bar_plus && phi(pd, *es.beta_bar_plus, Direction::Up) != *es.alpha_plus)
        throw std::logic_error("extract_bar_data: alpha_plus != Phi^-1(beta_bar_plus)");
    if (es.alpha_bar_plus && phi(pd, *es.alpha_bar_plus, Direction::Up) != *es.beta_plus)
        throw std::logic_error("extract_bar_data: beta_plus != Phi^-1(alpha_bar_plus)");

    for (const Partition& mu : q_bar.neighbours(pd.alpha_bar)) {
        if (mu > pd.alpha_bar && !(es.beta_bar_plus && mu == *es.beta_bar_plus))
            es.Zbar.push_back(mu);
    }
    es.Zbar = sorted_desc(es.Zbar);
    if (pd.case_no == 3 && !es.Zbar.empty())
        throw std::logic_error("extract_bar_data: case 3 must have empty Zbar");

    if (pd.case_no == 5) {
        if (!hook_mode)
            throw std::invalid_argument("extract_bar_data: case 5 is underdetermined outside hook mode");
        // resolved hook conclusion: alpha acquires only beta_plus, so Ybar is empty
    } else {
        for (const Partition& mu : q_bar.neighbours(pd.beta_bar))
            if (mu > pd.beta_bar && mu != pd.alpha_bar) es.Ybar.push_back(mu);
        es.Ybar = sorted_desc(es.Ybar);
    }

    for (const Partition& mu : es.Ybar)
        if (std::find(es.Zbar.begin(), es.Zbar.end(), mu) != es.Zbar.end())
            throw std::logic_error("extract_bar_data: Ybar and Zbar intersect");
    check_delta_set(es.Ybar, p, d - 1, d + 1, "Ybar");
    check_delta_set(es.Zbar, p, d, d + 2, "Zbar");
    if (es.alpha_bar_plus &&
        std::find(es.Ybar.begin(), es.Ybar.end(), *es.alpha_bar_plus) != es.Ybar.end())
        throw std::logic_error("extract_bar_data: [Ybar : alpha_bar_plus] must vanish");

    for (const Partition& mu : es.Ybar) es.Y.push_back(phi(pd, mu, Direction::Up));
    for (const Partition& mu : es.Zbar) es.Z.push_back(phi(pd, mu, Direction::Up));
    es.Y = sorted_desc(es.Y);
    es.Z = sorted_desc(es.Z);

    const Partition &ab = pd.alpha_bar, &bb = pd.beta_bar, &gb = pd.gamma_bar;
    const Partition &a = pd.alpha, &b = pd.beta, &g = pd.gamma;
    const auto &bbp = es.beta_bar_plus, &abp = es.alpha_bar_plus;
    const auto &ap = es.alpha_plus, &bp = es.beta_plus;
    switch (pd.case_no) {
        case 1:
            es.S_alpha_bar = layers({{ab}, es.Zbar});
            es.S_beta_bar = layers({{bb}, join({{ab}, es.Ybar})});
            es.S_gamma_bar = layers({{gb}, join({{bb}, es.Zbar}), {ab}});
            es.S_alpha = layers({{a}, es.Y});
            es.S_beta = layers({{b}, join({{a}, es.Z})});
            es.S_gamma = layers({{g}, join({{b}, es.Y}), {a}});
            break;
        case 2:
            es.S_alpha_bar = layers({{ab}, join({opt(bbp), es.Zbar})});
            es.S_beta_bar = layers({{bb}, join({{ab}, es.Ybar}), opt(bbp)});
            es.S_gamma_bar = layers({{gb}, join({{bb}, es.Zbar}), {ab}});
            es.S_alpha = layers({{a}, es.Y, opt(ap)});
            es.S_beta = layers({{b}, join({{a}, es.Z})});
            es.S_gamma = layers({{g}, join({{b}, es.Y}), {a}});
            break;
        case 3:
            es.S_alpha_bar = layers({{ab}, opt(bbp)});
            es.S_beta_bar = layers({{bb}, join({{ab}, es.Ybar}), opt(bbp)});
            es.S_gamma_bar = layers({{bb}, {ab}});
            es.S_alpha = layers({{a}, es.Y, opt(ap)});
            es.S_beta = layers({{a}});
            es.S_gamma = layers({{g}, es.Y, {a}});
            break;
        case 4:
            es.S_alpha_bar = layers({{ab}, join({opt(bbp), es.Zbar}), opt(abp)});
            es.S_beta_bar = layers({{bb}, join({{ab}, es.Ybar}), opt(bbp)});
            es.S_gamma_bar = layers({join({{bb}, es.Zbar}), {ab}});
            es.S_alpha = layers({{a}, join({opt(bp), es.Y}), opt(ap)});
            es.S_beta = layers({join({{a}, es.Z}), opt(bp)});
            es.S_gamma = layers({{g}, es.Y, {a}});
            break;
        case 5:
            es.S_alpha_bar = layers({{ab}, join({opt(bbp), es.Zbar}), opt(abp)});
            es.S_beta_bar = layers({join({{ab}, es.Ybar}), opt(bbp)});
            es.S_gamma_bar = layers({es.Zbar, {ab}});
            es.S_alpha = layers({{a}, join({opt(bp), es.Y}), opt(ap)});
            es.S_beta = layers({join({{a}, es.Z}), opt(bp)});
            es.S_gamma = layers({es.Y, {a}});
            break;
        case 6:
            es.S_alpha_bar = layers({{ab}, join({opt(bbp), es.Zbar}), opt(abp)});
            es.S_beta_bar = layers({{bb}, join({{ab}, es.Ybar}), opt(bbp)});
            es.S_gamma_bar = layers({{gb}, join({{bb}, es.Zbar}), {ab}});
            es.S_alpha = layers({{a}, join({opt(bp), es.Y}), opt(ap)});
            es.S_beta = layers({{b}, join({{a}, es.Z}), opt(bp)});
            es.S_gamma = layers({{g}, join({{b}, es.Y}), {a}});
            break;
        default:
            throw std::logic_error("extract_bar_data: bad case number");
    }
    return es;
}

std::pair<Quiver, ExceptionalStructures> induct_step(const Quiver& q_bar, const PairData& pd,
                                                     bool hook_mode) {
    int p = pd.upper.prime;
    ExceptionalStructures es = extract_bar_data(q_bar, pd, hook_mode);

    bool beta_regular = is_p_regular(pd.beta, p);
    bool in126 = pd.case_no == 1 || pd.case_no == 2 || pd.case_no == 6;
    if (beta_regular != in126)
        throw std::logic_error("induct_step: beta regularity contradicts the case number");

    Quiver q;
    q.block = pd.upper;
    std::map<Partition, int> index;
    std::vector<int> image(q_bar.vertices.size(), -1);
    for (size_t i = 0; i < q_bar.vertices.size(); ++i) {
        const QuiverVertex& v = q_bar.vertices[i];
        if (v.partition == pd.alpha_bar) continue;
        Partition img = phi(pd, v.partition, Direction::Up);
        DeltaColour dc = delta(img, p);
        // Phi preserves delta and colour on good partitions
        bool exceptional = v.partition == pd.beta_bar || v.partition == pd.gamma_bar;
        if (!exceptional && (dc.delta != v.delta || dc.colour != v.colour))
            throw std::logic_error("induct_step: Phi failed to preserve delta/colour on a good partition");
        image[i] = static_cast<int>(q.vertices.size());
        index[img] = image[i];
        q.vertices.push_back({img, dc.delta, dc.colour});
    }
    {
        DeltaColour dc = delta(pd.alpha, p);
        index[pd.alpha] = static_cast<int>(q.vertices.size());
        q.vertices.push_back({pd.alpha, dc.delta, dc.colour});
    }

    for (const auto& [x, y] : q_bar.edges) {
        if (image[static_cast<size_t>(x)] < 0 || image[static_cast<size_t>(y)] < 0) continue;
        q.add_edge(image[static_cast<size_t>(x)], image[static_cast<size_t>(y)]);
    }
    int ai = index.at(pd.alpha);
    if (beta_regular) q.add_edge(ai, index.at(pd.beta));
    if (es.beta_plus) q.add_edge(ai, index.at(*es.beta_plus));
    for (const Partition& mu : es.Y) q.add_edge(ai, index.at(mu));

    q.sort_vertices();

    // the vertex set must be exactly the regular partitions of the upper block
    std::vector<QuiverVertex> expected = block_vertices(pd.upper);
    if (expected.size() != q.vertices.size())
        throw std::logic_error("induct_step: vertex count mismatch");
    for (size_t i = 0; i < expected.size(); ++i)
        if (expected[i].partition != q.vertices[i].partition)
            throw std::logic_error("induct_step: vertex set mismatch after relabelling");
    for (const auto& [x, y] : q.edges) {
        int dd = q.vertices[static_cast<size_t>(x)].delta - q.vertices[static_cast<size_t>(y)].delta;
        if (dd != 1 && dd != -1) throw std::logic_error("induct_step: edge violates bipartite rows");
    }
    return {std::move(q), std::move(es)};
}

Quiver scopes_step(const Quiver& q_lower, const ScopesPair& sp) {
    if (q_lower.block != sp.lower)
        throw std::invalid_argument("scopes_step: quiver does not belong to the lower block");
    if (sp.k < 2) throw std::invalid_argument("scopes_step: not a (2:k>=2)-pair");
    int p = sp.upper.prime;
    Quiver q;
    q.block = sp.upper;
    for (const QuiverVertex& v : q_lower.vertices) {
        Partition img = scopes_relabel(sp, v.partition, Direction::Up);
        DeltaColour dc = delta(img, p);
        if (dc.delta != v.delta || dc.colour != v.colour)
            throw std::logic_error("scopes_step: Psi failed to preserve delta/colour");
        q.vertices.push_back({img, dc.delta, dc.colour});
    }
    q.edges = q_lower.edges;
    q.sort_vertices();
    std::vector<QuiverVertex> expected = block_vertices(sp.upper);
    if (expected.size() != q.vertices.size())
        throw std::logic_error("scopes_step: vertex count mismatch");
    for (size_t i = 0; i < expected.size(); ++i)
        if (expected[i].partition != q.vertices[i].partition)
            throw std::logic_error("scopes_step: vertex set mismatch");
    return q;
}

namespace {

Quiver compute_rec(int prime, int k, int l, ChainOrder order,
                   std::map<std::pair<int, int>, Quiver>& memo) {
    auto it = memo.find({k, l});
    if (it != memo.end()) return it->second;
    Quiver q;
    if (k == 0 && l == 0) {
        q = seed_quiver(prime);
    } else {
        int s = k + l;
        std::optional<BlockLabel> self = hook_core(prime, k, l);
        if (!self) throw std::invalid_argument("compute_quiver: (k,1^l) is not a p-core");
        if (s == prime + 1) {
            Quiver lower = compute_rec(prime, k - 1, l - 1, order, memo);
            q = scopes_step(lower, make_scopes_pair(*self, *hook_core(prime, k - 1, l - 1)));
        } else {
            int pk = k, pl = l;  // parent indices
            if (order == ChainOrder::KFirst) {
                if (s <= prime - 1 && l == 0) pk = k - 1;
                else pl = l - 1;
            } else {
                if (s <= prime - 1 && k == 1 && l > 0) pl = l - 1;
                else pk = k - 1;
            }
            Quiver lower = compute_rec(prime, pk, pl, order, memo);
            PairData pd = make_pair_data(*self, *hook_core(prime, pk, pl));
            q = induct_step(lower, pd, /*hook_mode=*/true).first;
        }
    }
    memo.emplace(std::pair<int, int>{k, l}, q);
    return q;
}

}  // namespace

Quiver compute_quiver(int prime, int k, int l, ChainOrder order) {
    if (prime < 5) throw std::invalid_argument("compute_quiver: prime must be >= 5");
    if (!hook_core(prime, k, l)) throw std::invalid_argument("compute_quiver: invalid hook core");
    std::map<std::pair<int, int>, Quiver> memo;
    return compute_rec(prime, k, l, order, memo);
}

}  // namespace w2q

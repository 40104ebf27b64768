#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "w2q/census.hpp"
#include "w2q/graph.hpp"
#include "w2q/io.hpp"
#include "w2q/refquiver.hpp"
#include "w2q/seed.hpp"
#include "w2q/verify.hpp"

using namespace w2q;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"weight-2 symmetric group blocks with hook cores: Ext-quivers, pair data, censuses"};
    app.require_subcommand(1);

    int prime = 5, k = 0, l = 0, n = 5, gi = 0, gj = 0;
    std::string format = "json", partition_arg, kind = "morita", file_a, file_b;

    auto* cmd_block = app.add_subcommand("block", "partitions of a weight-2 hook block");
    cmd_block->add_option("--prime", prime)->required();
    cmd_block->add_option("--k", k)->required();
    cmd_block->add_option("--l", l)->required();

    auto* cmd_quiver = app.add_subcommand("quiver", "Ext-quiver of a weight-2 hook block");
    cmd_quiver->add_option("--prime", prime)->required();
    cmd_quiver->add_option("--k", k)->required();
    cmd_quiver->add_option("--l", l)->required();
    cmd_quiver->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_specht = app.add_subcommand("specht", "Specht Loewy layers in the principal block of F.Sym(2p)");
    cmd_specht->add_option("--prime", prime)->required();

    auto* cmd_delta = app.add_subcommand("delta", "delta value and colour of a weight-2 partition");
    cmd_delta->add_option("--prime", prime)->required();
    cmd_delta->add_option("--partition", partition_arg)->required();

    auto* cmd_pairs = app.add_subcommand("pairs", "pairs below a weight-2 hook block");
    cmd_pairs->add_option("--prime", prime)->required();
    cmd_pairs->add_option("--k", k)->required();
    cmd_pairs->add_option("--l", l)->required();

    auto* cmd_census = app.add_subcommand("census", "Scopes or Morita class representatives");
    cmd_census->add_option("--prime", prime)->required();
    cmd_census->add_option("--kind", kind)->check(CLI::IsMember({"morita", "scopes"}));

    auto* cmd_ref = app.add_subcommand("refquiver", "reference quiver of the generator family");
    cmd_ref->add_option("--n", n)->required();
    cmd_ref->add_option("--i", gi)->required();
    cmd_ref->add_option("--j", gj)->required();
    cmd_ref->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_iso = app.add_subcommand("iso", "test two graph files for isomorphism");
    cmd_iso->add_option("first", file_a)->required();
    cmd_iso->add_option("second", file_b)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
    cmd_verify->add_option("--prime", prime)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
    }

    if (cmd_block->parsed()) {
        auto b = hook_core(prime, k, l);
        if (!b) throw std::invalid_argument("not a p-core hook");
        json j;
        j["block"] = to_json(*b);
        json parts = json::array(), regular = json::array();
        for (const Partition& part : block_partitions(*b)) {
            parts.push_back(to_json(part));
            if (is_p_regular(part, prime)) regular.push_back(to_json(part));
        }
        j["partitions"] = parts;
        j["regular"] = regular;
        std::cout << j.dump(2) << "\n";
    } else if (cmd_quiver->parsed()) {
        Quiver q = compute_quiver(prime, k, l);
        if (format == "dot") std::cout << to_dot(q);
        else std::cout << to_json(q).dump(2) << "\n";
    } else if (cmd_specht->parsed()) {
        json j = json::object();
        for (const auto& [mu, st] : specht_structures(prime)) j[mu.to_string()] = to_json(st);
        std::cout << j.dump(2) << "\n";
    } else if (cmd_delta->parsed()) {
        std::cout << to_json(delta(parse_partition(partition_arg), prime)).dump() << "\n";
    } else if (cmd_pairs->parsed()) {
        auto b = hook_core(prime, k, l);
        if (!b) throw std::invalid_argument("not a p-core hook");
        json j;
        j["block"] = to_json(*b);
        json list = json::array();
        for (const auto& [kk, lower] : find_pairs(*b)) {
            json entry;
            entry["k"] = kk;
            entry["lower"] = to_json(lower);
            if (kk == 1) entry["pair_data"] = to_json(make_pair_data(*b, lower));
            list.push_back(entry);
        }
        j["pairs"] = list;
        std::cout << j.dump(2) << "\n";
    } else if (cmd_census->parsed()) {
        auto reps = kind == "morita" ? morita_census(prime) : hook_scopes_classes(prime);
        json j = json::array();
        for (auto [rk, rl] : reps) j.push_back(json::array({rk, rl}));
        std::cout << j.dump() << "\n";
    } else if (cmd_ref->parsed()) {
        PlainGraph g = gen_ref_quiver({n, gi, gj});
        if (format == "dot") std::cout << to_dot(g);
        else std::cout << to_json(g).dump(2) << "\n";
    } else if (cmd_iso->parsed()) {
        auto load = [](const std::string& path) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open " + path);
            json j;
            in >> j;
            return plain_graph_from_json(j);
        };
        PlainGraph g = load(file_a), h = load(file_b);
        auto map = iso(g, h);
        json j;
        j["isomorphic"] = map.has_value();
        j["mapping"] = map ? json(*map) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else if (cmd_verify->parsed()) {
        auto results = verify_suites(prime);
        json j = json::array();
        bool all = true;
        for (const auto& r : results) {
            json e;
            e["suite"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            j.push_back(e);
            all = all && r.pass;
        }
        std::cout << j.dump(2) << "\n";
        if (!all) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

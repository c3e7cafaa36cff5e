#include <doctest.h>

#include <algorithm>

#include "kop/branchdec.hpp"
#include "kop/generator.hpp"
#include "kop/layers.hpp"
#include "kop/verify.hpp"

using namespace kop;

namespace {

Embedding wheel5() {
    std::vector<std::vector<int>> rot(6);
    for (int j = 0; j < 5; j++) rot[j] = {(j + 1) % 5, 5, (j + 4) % 5};
    rot[5] = {0, 1, 2, 3, 4};
    return build_embedding(6, rot, {0, 1});
}

CheckResult checked(const Embedding& emb, const BranchDecomposition& bd) {
    auto r = check_bd(emb.n, emb.edge_list(), bd);
    INFO(r.violation);
    CHECK(r.ok);
    return r;
}

} // namespace

TEST_SUITE("branchdec") {

TEST_CASE("triangle gets the exact branchwidth") {
    auto emb = canned("c3");
    auto bd = branch_decompose(emb);
    auto r = checked(emb, bd);
    CHECK(r.width == 2);
    CHECK(bd.width == 2);
    CHECK(oracle_branchwidth(emb.n, emb.edge_list()) == 2);
}

TEST_CASE("star K13 has width one") {
    std::vector<std::vector<int>> rot{{1, 2, 3}, {0}, {0}, {0}};
    auto emb = build_embedding(4, rot, {1, 0});
    auto bd = branch_decompose(emb);
    auto r = checked(emb, bd);
    CHECK(r.width == 1);
    CHECK(oracle_branchwidth(emb.n, emb.edge_list()) == 1);
    // steps a/b leave the star itself as the branch tree
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].n_nodes == 4);
}

TEST_CASE("single-edge component is a width-zero sentinel") {
    auto emb = canned("grid1x2");
    auto bd = branch_decompose(emb);
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].n_nodes == 1);
    CHECK(bd.blocks[0].tree_edges.empty());
    CHECK(bd.width == 0);
    checked(emb, bd);
}

TEST_CASE("cycle C6 hits width two under the 2k+1 bound") {
    auto emb = canned("c6");
    auto bd = branch_decompose(emb);
    auto r = checked(emb, bd);
    CHECK(r.width == 2);
    CHECK(r.width <= 3);
}

TEST_CASE("k4 stays within 2k+1 and above the oracle") {
    auto emb = canned("k4");
    auto bd = branch_decompose(emb);
    auto r = checked(emb, bd);
    CHECK(oracle_branchwidth(emb.n, emb.edge_list()) == 3);
    CHECK(r.width >= 3);
    CHECK(r.width <= 5);
}

TEST_CASE("disconnected graphs produce one block per edged component") {
    std::vector<std::vector<int>> rot{{1, 2}, {2, 0}, {0, 1}, {4}, {3}, {}};
    auto emb = build_embedding(6, rot, {0, 1});
    auto bd = branch_decompose(emb);
    CHECK(bd.blocks.size() == 2);
    checked(emb, bd);
}

TEST_CASE("restriction drops expansion leaves and keeps validity") {
    auto emb = wheel5();
    auto la = analyze_layers(emb);
    auto [exp, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(exp);
    auto before = build_branch(exp, fr.forest);
    auto br = check_bd(exp.n, exp.edge_list(), before);
    INFO(br.violation);
    CHECK(br.ok);
    auto after = restrict_to_minor(before, rec);
    auto ar = checked(emb, after);
    CHECK(ar.width <= br.width);
    int leaves_before = 0, leaves_after = 0;
    for (auto& b : before.blocks) leaves_before += (int)b.sigma.size();
    for (auto& b : after.blocks) leaves_after += (int)b.sigma.size();
    CHECK(leaves_before == exp.m());
    CHECK(leaves_after == emb.m());
}

TEST_CASE("leaf-path coherence on the spanning forest") {
    // g between f and h in T => sigma neighbors keep that betweenness in T_b
    auto emb = generate({2, 40, 11, 0.4, 0.5});
    auto la = analyze_layers(emb);
    auto [exp, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(exp);
    auto bd = build_branch(exp, fr.forest);
    REQUIRE(bd.blocks.size() == 1);
    const auto& blk = bd.blocks[0];

    std::vector<std::vector<std::pair<int, int>>> tadj(blk.n_nodes);
    for (int i = 0; i < (int)blk.tree_edges.size(); i++) {
        tadj[blk.tree_edges[i].first].push_back({blk.tree_edges[i].second, i});
        tadj[blk.tree_edges[i].second].push_back({blk.tree_edges[i].first, i});
    }
    std::vector<int> sigma_node(exp.m(), -1);
    for (auto [node, e] : blk.sigma) sigma_node[e] = node;
    std::vector<int> deg(blk.n_nodes, 0);
    for (auto [a, b] : blk.tree_edges) deg[a]++, deg[b]++;
    auto neighbor_of_leaf = [&](int e) { return tadj[sigma_node[e]][0].first; };
    auto tb_path = [&](int a, int b) {
        std::vector<int> from(blk.n_nodes, -1);
        std::vector<int> q{a};
        from[a] = a;
        for (size_t i = 0; i < q.size(); i++)
            for (auto [u, ei] : tadj[q[i]])
                if (from[u] < 0) {
                    from[u] = q[i];
                    q.push_back(u);
                }
        std::vector<int> path{b};
        while (path.back() != a) path.push_back(from[path.back()]);
        return path;
    };

    // forest path between edge midpoints, tracked as edge sequences
    std::vector<std::vector<std::pair<int, int>>> fadj(exp.n);
    for (int e = 0; e < exp.m(); e++)
        if (fr.forest.in_forest[e]) {
            auto [x, y] = exp.edge_ends[e];
            fadj[x].push_back({y, e});
            fadj[y].push_back({x, e});
        }
    std::vector<int> forest_edges;
    for (int e = 0; e < exp.m(); e++)
        if (fr.forest.in_forest[e]) forest_edges.push_back(e);
    int checks = 0;
    for (size_t i = 0; i < forest_edges.size() && checks < 200; i += 3) {
        for (size_t j = i + 1; j < forest_edges.size() && checks < 200; j += 5) {
            int f = forest_edges[i], h = forest_edges[j];
            // edges on the T-path between f and h: BFS from f's endpoints
            int s = exp.edge_ends[f].first, t = exp.edge_ends[h].first;
            std::vector<int> from(exp.n, -1), via(exp.n, -1);
            std::vector<int> q{s};
            from[s] = s;
            for (size_t qi = 0; qi < q.size(); qi++)
                for (auto [u, fe] : fadj[q[qi]])
                    if (from[u] < 0) {
                        from[u] = q[qi];
                        via[u] = fe;
                        q.push_back(u);
                    }
            std::vector<int> between;
            for (int x = t; x != s; x = from[x]) between.push_back(via[x]);
            for (int g : between) {
                if (g == f || g == h) continue;
                auto path = tb_path(neighbor_of_leaf(f), neighbor_of_leaf(h));
                CHECK(std::count(path.begin(), path.end(), neighbor_of_leaf(g)) == 1);
                checks++;
            }
        }
    }
    CHECK(checks > 0);
}

TEST_CASE("per-edge order bounds from the construction lemmas") {
    for (uint64_t seed = 1; seed <= 12; seed++) {
        for (int k = 1; k <= 3; k++) {
            auto emb = generate({k, 20 * k, seed, 0.5, 0.4});
            auto la = analyze_layers(emb);
            auto [exp, rec] = expand_high_degree(emb, la.face_layer);
            auto fr = spanning_forest(exp);
            auto bd = build_branch(exp, fr.forest);
            auto rep = remember_numbers(exp.n, exp.edge_list(), fr.forest);
            for (const auto& blk : bd.blocks) {
                auto ords = middle_set_orders(blk, exp.edge_ends, exp.n);
                for (size_t i = 0; i < blk.tree_edges.size(); i++)
                    for (const auto& tag : blk.edge_tags[i]) {
                        if (tag.kind == BranchTag::forest_half)
                            CHECK(ords[i] <= rep.per_edge[tag.edge] + 1);
                        else
                            CHECK(ords[i] <= 2);
                    }
            }
            auto r = check_bd(exp.n, exp.edge_list(), bd);
            INFO(r.violation);
            CHECK(r.ok);
            CHECK(r.width <= std::max(2, rep.er + 1));
        }
    }
}

TEST_CASE("restriction never increases the width") {
    for (uint64_t seed = 1; seed <= 25; seed++) {
        auto emb = generate({2, 36, seed, 0.6, 0.5});
        auto la = analyze_layers(emb);
        auto [exp, rec] = expand_high_degree(emb, la.face_layer);
        auto fr = spanning_forest(exp);
        auto before = build_branch(exp, fr.forest);
        auto after = restrict_to_minor(before, rec);
        auto wb = check_bd(exp.n, exp.edge_list(), before);
        auto wa = check_bd(emb.n, emb.edge_list(), after);
        CHECK(wb.ok);
        CHECK(wa.ok);
        CHECK(wa.width <= wb.width);
    }
}

TEST_CASE("width bound 2k+1 across generated instances") {
    for (int k = 1; k <= 4; k++)
        for (uint64_t seed = 1; seed <= 8; seed++) {
            auto emb = generate({k, 25 * k, seed, 0.5, 0.4});
            auto bd = branch_decompose(emb);
            auto r = checked(emb, bd);
            CHECK(r.width <= 2 * k + 1);
            CHECK(bd.width == r.width);
        }
}

TEST_CASE("bigger instance stays valid") {
    auto emb = generate({2, 3000, 4242, 0.4, 0.3});
    auto bd = branch_decompose(emb);
    auto r = checked(emb, bd);
    CHECK(r.width <= 5);
}

} // TEST_SUITE

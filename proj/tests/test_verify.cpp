#include <doctest.h>

#include <algorithm>

#include "kop/branchdec.hpp"
#include "kop/generator.hpp"
#include "kop/layers.hpp"
#include "kop/treedec.hpp"
#include "kop/verify.hpp"

using namespace kop;

TEST_SUITE("verify") {

TEST_CASE("check_td catches broken decompositions") {
    auto emb = canned("c5");
    auto td = decompose(emb);
    CHECK(check_td(emb.n, emb.edge_list(), td).ok);

    SUBCASE("dropping a bag vertex breaks coverage") {
        auto bad = td;
        for (auto& bag : bad.bags)
            if (bag.size() == 3) {
                bag.pop_back();
                break;
            }
        auto r = check_td(emb.n, emb.edge_list(), bad);
        CHECK_FALSE(r.ok);
        CHECK(!r.violation.empty());
    }
    SUBCASE("splitting a vertex's nodes breaks connectivity") {
        auto bad = td;
        bad.bags.push_back({0, 2});
        bad.bags.push_back({2}); // island re-using vertex 2
        bad.tree_edges.push_back({0, (int)bad.bags.size() - 2});
        auto r = check_td(emb.n, emb.edge_list(), bad);
        CHECK_FALSE(r.ok);
    }
    SUBCASE("missing vertex") {
        TreeDecomposition bad;
        bad.n_graph = 2;
        bad.bags = {{0}};
        auto r = check_td(2, {}, bad);
        CHECK_FALSE(r.ok);
    }
    SUBCASE("cyclic node structure is rejected") {
        auto bad = td;
        bad.tree_edges.push_back({0, 1});
        bad.tree_edges.push_back({1, 2});
        bad.tree_edges.push_back({2, 0});
        CHECK_FALSE(check_td(emb.n, emb.edge_list(), bad).ok);
    }
}

TEST_CASE("check_bd catches broken branch decompositions") {
    auto emb = canned("c3");
    auto bd = branch_decompose(emb);
    CHECK(check_bd(emb.n, emb.edge_list(), bd).ok);

    SUBCASE("duplicate sigma target") {
        auto bad = bd;
        bad.blocks[0].sigma[1].second = bad.blocks[0].sigma[0].second;
        CHECK_FALSE(check_bd(emb.n, emb.edge_list(), bad).ok);
    }
    SUBCASE("degree-4 internal node") {
        BranchDecomposition bad;
        BranchBlock blk;
        blk.n_nodes = 5;
        blk.tree_edges = {{4, 0}, {4, 1}, {4, 2}, {4, 3}};
        blk.sigma = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
        bad.blocks.push_back(blk);
        std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        CHECK_FALSE(check_bd(4, edges, bad).ok);
    }
    SUBCASE("uncovered edge") {
        auto bad = bd;
        bad.blocks[0].sigma.pop_back();
        CHECK_FALSE(check_bd(emb.n, emb.edge_list(), bad).ok);
    }
}

TEST_CASE("naive and fast middle-set widths agree") {
    for (uint64_t seed = 1; seed <= 15; seed++) {
        auto emb = generate({2 + (int)(seed % 2), 45, seed, 0.5, 0.4});
        auto la = analyze_layers(emb);
        auto [exp, rec] = expand_high_degree(emb, la.face_layer);
        auto fr = spanning_forest(exp);
        auto bd = build_branch(exp, fr.forest);
        for (const auto& blk : bd.blocks) {
            auto ords = middle_set_orders(blk, exp.edge_ends, exp.n);
            int fast = ords.empty() ? 0 : *std::max_element(ords.begin(), ords.end());
            // check_bd picks the naive bipartition at this size
            BranchDecomposition single;
            single.blocks.push_back(blk);
            auto r = check_bd(exp.n, exp.edge_list(), single);
            CHECK(r.ok);
            CHECK(r.width == fast);
        }
    }
}

TEST_CASE("remember numbers of hand instances") {
    auto emb = canned("c6");
    auto fr = spanning_forest(emb);
    auto rep = remember_numbers(emb.n, emb.edge_list(), fr.forest);
    CHECK(rep.vr == 1);
    CHECK(rep.er == 1);
    for (int c : rep.per_vertex) CHECK(c == 1);
}

TEST_CASE("remember numbers reject non-spanning forests") {
    auto emb = canned("c6");
    auto fr = spanning_forest(emb);
    SpanningForest broken = fr.forest;
    broken.component[0] = 99; // pretend 0 sits in another tree
    CHECK_THROWS_AS(remember_numbers(emb.n, emb.edge_list(), broken), error);
}

TEST_CASE("treewidth oracle") {
    auto tw = [](const Embedding& e) { return oracle_treewidth(e.n, e.edge_list()); };
    CHECK(tw(canned("grid1x2")) == 1);
    CHECK(tw(canned("c3")) == 2);
    CHECK(tw(canned("k4")) == 3);
    CHECK(tw(canned("c5")) == 2);
    CHECK(tw(canned("grid1x8")) == 1);
    CHECK(tw(canned("grid2x4")) == 2);
    CHECK(tw(canned("grid3x3")) == 3);
    CHECK_THROWS_AS(tw(canned("c11")), error);
    CHECK(oracle_treewidth(3, {}) == 0);
}

TEST_CASE("branchwidth oracle") {
    auto bw = [](const Embedding& e) { return oracle_branchwidth(e.n, e.edge_list()); };
    CHECK(bw(canned("grid1x2")) == 0);
    CHECK(bw(canned("grid1x3")) == 1); // two-edge path
    CHECK(bw(canned("grid1x4")) == 2); // three-edge path needs the star cut
    CHECK(bw(canned("c3")) == 2);
    CHECK(bw(canned("c6")) == 2);
    CHECK(bw(canned("grid2x3")) == 2);
    CHECK_THROWS_AS(bw(canned("c9")), error);
    CHECK(oracle_branchwidth(4, {{0, 1}, {2, 3}}) == 0);
}

TEST_CASE("treewidth/branchwidth sandwich on small instances") {
    std::vector<Embedding> insts;
    for (auto name : {"c3", "c4", "c5", "c6", "c7", "c8", "k4", "grid2x3", "grid2x4", "grid1x5"})
        insts.push_back(canned(name));
    for (uint64_t seed = 1; seed <= 10; seed++) insts.push_back(generate({1, 7, seed, 0.5, 0.5}));
    int tested = 0;
    for (const auto& emb : insts) {
        auto edges = emb.edge_list();
        if (emb.n > 8 || edges.size() > 8 || edges.empty()) continue;
        int t = oracle_treewidth(emb.n, edges);
        int b = oracle_branchwidth(emb.n, edges);
        CHECK(std::max(b, 2) <= t + 1);
        CHECK(t + 1 <= std::max(3 * b / 2, 2));
        CHECK(decompose(emb).width() >= t);
        auto bd = branch_decompose(emb);
        CHECK(check_bd(emb.n, edges, bd).width >= b);
        tested++;
    }
    CHECK(tested >= 12);
}

} // TEST_SUITE

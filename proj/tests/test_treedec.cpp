#include <doctest.h>

#include <algorithm>
#include <set>

#include "kop/generator.hpp"
#include "kop/layers.hpp"
#include "kop/treedec.hpp"
#include "kop/verify.hpp"

using namespace kop;

namespace {

Embedding nested_triangles() {
    return build_embedding(6,
                           {{1, 3, 2}, {2, 4, 0}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}},
                           {0, 1});
}

Embedding wheel5() {
    std::vector<std::vector<int>> rot(6);
    for (int j = 0; j < 5; j++) rot[j] = {(j + 1) % 5, 5, (j + 4) % 5};
    rot[5] = {0, 1, 2, 3, 4};
    return build_embedding(6, rot, {0, 1});
}

void check_valid(const Embedding& emb, const TreeDecomposition& td) {
    auto r = check_td(emb.n, emb.edge_list(), td);
    INFO(r.violation);
    CHECK(r.ok);
}

} // namespace

TEST_SUITE("treedec") {

TEST_CASE("single edge gives one bag of width one") {
    auto emb = canned("grid1x2");
    auto td = decompose(emb);
    CHECK(td.bags.size() == 1);
    CHECK(td.width() == 1);
    check_valid(emb, td);
}

TEST_CASE("cycle C5 peels into width two") {
    auto emb = canned("c5");
    auto td = decompose(emb);
    CHECK(td.width() == 2);
    CHECK(td.bags.size() == 4); // three removals plus the root edge bag
    std::multiset<size_t> sizes;
    for (auto& b : td.bags) sizes.insert(b.size());
    CHECK(sizes == std::multiset<size_t>{2, 3, 3, 3});
    check_valid(emb, td);
}

TEST_CASE("paths have width one") {
    auto emb = canned("grid1x4");
    auto td = decompose(emb);
    CHECK(td.width() == 1);
    check_valid(emb, td);
}

TEST_CASE("edge-less and empty graphs") {
    auto emb = build_embedding(3, {{}, {}, {}}, {0, 0});
    auto td = decompose(emb);
    CHECK(td.bags.size() == 3);
    CHECK(td.width() == 0);
    check_valid(emb, td);
    auto empty = decompose(build_embedding(0, {}, {0, 0}));
    CHECK(empty.bags.empty());
}

TEST_CASE("mixed components decompose as a forest") {
    // a triangle next to a path next to an isolated vertex
    std::vector<std::vector<int>> rot{{1, 2}, {2, 0}, {0, 1}, {4}, {3, 5}, {4}, {}};
    auto emb = build_embedding(7, rot, {0, 1});
    auto td = decompose(emb);
    check_valid(emb, td);
    CHECK(td.width() == 2);
}

TEST_CASE("open-face tree of a stripped cycle is a single root-child pair") {
    auto emb = canned("c6");
    auto fr = spanning_forest(emb);
    auto oft = build_open_face_tree(emb, fr.forest, fr.trace);
    CHECK(oft.root == emb.outer_face);
    int children = 0;
    for (int f = 0; f < emb.n_faces; f++)
        if (oft.parent_edge[f] >= 0) {
            children++;
            CHECK(oft.parent[f] == emb.outer_face);
        }
    CHECK(children == 1);
}

TEST_CASE("open-face tree of nested triangles has three levels") {
    auto emb = nested_triangles();
    auto fr = spanning_forest(emb);
    auto oft = build_open_face_tree(emb, fr.forest, fr.trace);
    // outer -> three quads, one of which holds the inner face
    int depth2 = 0;
    for (int f = 0; f < emb.n_faces; f++) {
        if (f == oft.root) continue;
        if (oft.parent[f] == oft.root) continue;
        CHECK(oft.parent[oft.parent[f]] == oft.root);
        depth2++;
    }
    CHECK(depth2 == 1);
}

TEST_CASE("open-face tree of a tree input is just the root") {
    auto emb = canned("grid1x5");
    auto fr = spanning_forest(emb);
    auto oft = build_open_face_tree(emb, fr.forest, fr.trace);
    for (int f = 0; f < emb.n_faces; f++) CHECK(oft.parent_edge[f] < 0);
}

TEST_CASE("fill_bags pushes the designated endpoint around the cycle") {
    auto emb = canned("c6");
    auto fr = spanning_forest(emb);
    auto oft = build_open_face_tree(emb, fr.forest, fr.trace);
    auto td = fill_bags(emb, fr.forest, oft);
    CHECK(td.width() == 2);
    check_valid(emb, td);
    // missing edge is (0,1); 0 is designated and lands everywhere except at 1
    auto [a, b] = emb.edge_ends[0];
    CHECK(a == 0);
    CHECK(b == 1);
    CHECK(td.bags[1] == std::vector<int>{1});
    for (int v : {2, 3, 4, 5}) CHECK(td.bags[v] == std::vector<int>{0, v});
}

TEST_CASE("fill_bags on a forest keeps width one") {
    auto emb = canned("grid1x6");
    auto fr = spanning_forest(emb);
    auto oft = build_open_face_tree(emb, fr.forest, fr.trace);
    auto td = fill_bags(emb, fr.forest, oft);
    CHECK(td.width() == 1);
    check_valid(emb, td);
}

TEST_CASE("k4 decomposes within the bound") {
    auto emb = canned("k4");
    auto td = decompose(emb);
    check_valid(emb, td);
    CHECK(td.width() >= 3); // tw(K4) = 3
    CHECK(td.width() <= 5);
}

TEST_CASE("grid6x6 stays within 3k-1") {
    auto emb = canned("grid6x6");
    auto td = decompose(emb);
    check_valid(emb, td);
    CHECK(td.width() <= 8);
}

TEST_CASE("degree-5 hub inside a k=2 instance") {
    auto emb = wheel5();
    auto td = decompose(emb);
    check_valid(emb, td);
    CHECK(td.width() <= 5);
}

TEST_CASE("shrink is the identity for identity records") {
    auto emb = canned("k4");
    auto la = analyze_layers(emb);
    auto [exp, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(exp);
    auto td = fill_bags(exp, fr.forest, build_open_face_tree(exp, fr.forest, fr.trace));
    auto shrunk = shrink(td, rec);
    CHECK(shrunk.bags == td.bags);
    CHECK(shrunk.tree_edges == td.tree_edges);
}

TEST_CASE("shrink merges path vertices and never grows the width") {
    auto emb = wheel5();
    auto la = analyze_layers(emb);
    auto [exp, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(exp);
    auto td = fill_bags(exp, fr.forest, build_open_face_tree(exp, fr.forest, fr.trace));
    auto exp_check = check_td(exp.n, exp.edge_list(), td);
    INFO(exp_check.violation);
    CHECK(exp_check.ok);
    auto shrunk = shrink(td, rec);
    CHECK(shrunk.width() <= td.width());
    check_valid(emb, shrunk);
}

TEST_CASE("decompose_outerplanar rejects deeper graphs") {
    CHECK_THROWS_AS(decompose_outerplanar(canned("k4")), error);
}

TEST_CASE("bag contents match an independent fundamental-cycle walk") {
    for (uint64_t seed : {2, 9}) {
        for (int k = 2; k <= 3; k++) {
            auto emb = generate({k, 50 * k, seed, 0.5, 0.4});
            auto la = analyze_layers(emb);
            auto [exp, rec] = expand_high_degree(emb, la.face_layer);
            auto fr = spanning_forest(exp);
            auto oft = build_open_face_tree(exp, fr.forest, fr.trace);
            auto td = fill_bags(exp, fr.forest, oft);

            // reference bags via BFS paths through the forest
            std::vector<std::set<int>> want(td.bags.size());
            std::vector<int> enode(exp.m(), -1);
            int next = exp.n;
            for (int e = 0; e < exp.m(); e++)
                if (fr.forest.in_forest[e]) enode[e] = next++;
            for (int v = 0; v < exp.n; v++) want[v].insert(v);
            for (int e = 0; e < exp.m(); e++)
                if (enode[e] >= 0) {
                    want[enode[e]].insert(exp.edge_ends[e].first);
                    want[enode[e]].insert(exp.edge_ends[e].second);
                }
            std::vector<std::vector<std::pair<int, int>>> fadj(exp.n);
            for (int e = 0; e < exp.m(); e++)
                if (fr.forest.in_forest[e]) {
                    auto [x, y] = exp.edge_ends[e];
                    fadj[x].push_back({y, e});
                    fadj[y].push_back({x, e});
                }
            for (int e = 0; e < exp.m(); e++) {
                if (fr.forest.in_forest[e]) continue;
                auto [s, t] = exp.edge_ends[e];
                // BFS path s -> t in the forest
                std::vector<int> from(exp.n, -1), via(exp.n, -1);
                std::vector<int> queue{s};
                from[s] = s;
                for (size_t i = 0; i < queue.size() && from[t] < 0; i++)
                    for (auto [u, fe] : fadj[queue[i]])
                        if (from[u] < 0) {
                            from[u] = queue[i];
                            via[u] = fe;
                            queue.push_back(u);
                        }
                int d = std::min(s, t), w = std::max(s, t);
                for (int x = t; ; x = from[x]) {
                    if (x != w) want[x].insert(d);
                    if (x == s) break;
                    want[enode[via[x]]].insert(d);
                }
            }
            for (size_t i = 0; i < td.bags.size(); i++)
                CHECK(std::set<int>(td.bags[i].begin(), td.bags[i].end()) == want[i]);
        }
    }
}

TEST_CASE("pipeline width bound across generated instances") {
    for (int k = 1; k <= 4; k++)
        for (uint64_t seed = 1; seed <= 8; seed++) {
            auto emb = generate({k, 25 * k, seed, 0.5, 0.4});
            auto td = decompose(emb);
            check_valid(emb, td);
            CHECK(td.width() <= 3 * k - 1);
        }
}

} // TEST_SUITE

#include <doctest.h>

#include <algorithm>
#include <set>

#include "kop/embedding.hpp"
#include "kop/generator.hpp"
#include "kop/io.hpp"

using namespace kop;

namespace {

std::set<std::pair<int, int>> edge_set(const Embedding& e) {
    auto el = e.edge_list();
    return {el.begin(), el.end()};
}

long total_face_length(const Embedding& e) {
    long s = 0;
    for (int f = 0; f < e.n_faces; f++) s += e.face_length(f);
    return s;
}

} // namespace

TEST_SUITE("embedding") {

TEST_CASE("triangle has two faces with the hinted one outer") {
    auto emb = build_embedding(3, {{1, 2}, {2, 0}, {0, 1}}, {0, 1});
    CHECK(emb.n_faces == 2);
    CHECK(emb.m() == 3);
    CHECK(emb.he_face[emb.he_of(0, 1)] == emb.outer_face);
    auto [f1, f2] = emb.faces_of_edge(0);
    CHECK(f1 != f2);
}

TEST_CASE("single edge has one face and satisfies euler") {
    auto emb = build_embedding(2, {{1}, {0}}, {0, 1});
    CHECK(emb.n_faces == 1);
    CHECK(emb.face_length(emb.outer_face) == 2);
}

TEST_CASE("k4 standard drawing has four faces") {
    auto emb = canned("k4");
    CHECK(emb.n_faces == 4);
    SUBCASE("spoke edges border two distinct inner faces") {
        int e = -1;
        for (int i = 0; i < emb.m(); i++) {
            auto [a, b] = emb.edge_ends[i];
            if (a == 3 || b == 3) e = i;
        }
        auto [f1, f2] = emb.faces_of_edge(e);
        CHECK(f1 != f2);
        CHECK(f1 != emb.outer_face);
        CHECK(f2 != emb.outer_face);
    }
}

TEST_CASE("bridge edges border the outer face twice") {
    auto emb = build_embedding(3, {{1}, {0, 2}, {1}}, {0, 1});
    CHECK(emb.n_faces == 1);
    for (int e = 0; e < emb.m(); e++) {
        auto [f1, f2] = emb.faces_of_edge(e);
        CHECK(f1 == emb.outer_face);
        CHECK(f2 == emb.outer_face);
    }
}

TEST_CASE("face lengths sum to twice the edge count") {
    for (auto name : {"c5", "k4", "grid4x4", "fig2"}) {
        auto emb = canned(name);
        CHECK(total_face_length(emb) == 2l * emb.m());
    }
    auto gen = generate({3, 60, 7, 0.5, 0.4});
    CHECK(total_face_length(gen) == 2l * gen.m());
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build_embedding(2, {{1}, {}}, {0, 1}), error);
    CHECK_THROWS_AS(build_embedding(2, {{1, 1}, {0}}, {0, 1}), error);
    CHECK_THROWS_AS(build_embedding(1, {{0}}, {0, 0}), error);
    CHECK_THROWS_AS(build_embedding(3, {{1, 2}, {2, 0}, {0, 1}}, {0, 0}), error);

    SUBCASE("error kinds") {
        try {
            build_embedding(2, {{1}, {}}, {0, 1});
        } catch (const error& e) {
            CHECK(e.code == errc::asymmetric_rotation);
        }
        try {
            build_embedding(3, {{1, 2}, {2, 0}, {0, 1}}, {2, 0});
            CHECK(true);
        } catch (const error&) {
            CHECK(false);
        }
    }
}

TEST_CASE("non-planar rotation systems violate euler") {
    // K5 with ascending rotations; no rotation system of K5 is planar
    std::vector<std::vector<int>> rot(5);
    for (int u = 0; u < 5; u++)
        for (int v = 0; v < 5; v++)
            if (u != v) rot[u].push_back(v);
    CHECK_THROWS_AS(build_embedding(5, rot, {0, 1}), error);
    try {
        build_embedding(5, rot, {0, 1});
    } catch (const error& e) {
        CHECK(e.code == errc::euler_violation);
    }
}

TEST_CASE("delete_edges") {
    auto tri = build_embedding(3, {{1, 2}, {2, 0}, {0, 1}}, {0, 1});
    SUBCASE("deleting everything leaves isolated vertices and one face") {
        auto res = delete_edges(tri, {0, 1, 2});
        CHECK(res.m() == 0);
        CHECK(res.n == 3);
        CHECK(res.n_faces == 1);
    }
    SUBCASE("deleting nothing is the identity") {
        auto res = delete_edges(tri, {});
        CHECK(write_emb(res) == write_emb(tri));
    }
    SUBCASE("k4 minus the outer triangle is a star") {
        auto k4 = canned("k4");
        std::vector<int> outer3;
        for (int e = 0; e < k4.m(); e++) {
            auto [a, b] = k4.edge_ends[e];
            if (a != 3 && b != 3) outer3.push_back(e);
        }
        REQUIRE(outer3.size() == 3);
        auto star = delete_edges(k4, outer3);
        CHECK(star.m() == 3);
        CHECK(star.n_faces == 1);
        CHECK(star.degree(3) == 3);
    }
    SUBCASE("deleting a union equals deleting in two steps, as abstract graphs") {
        auto g = canned("grid4x4");
        std::vector<int> a{0, 3, 7}, b{5, 11};
        std::vector<int> both{0, 3, 7, 5, 11};
        auto one = delete_edges(g, both);
        auto first = delete_edges(g, a);
        // translate b's ids into first's edge id space
        std::set<std::pair<int, int>> want;
        for (int e : b) {
            auto [x, y] = g.edge_ends[e];
            want.insert({std::min(x, y), std::max(x, y)});
        }
        std::vector<int> b2;
        for (int e = 0; e < first.m(); e++) {
            auto [x, y] = first.edge_ends[e];
            if (want.count({std::min(x, y), std::max(x, y)})) b2.push_back(e);
        }
        auto two = delete_edges(first, b2);
        CHECK(edge_set(one) == edge_set(two));
        CHECK(one.n == two.n);
    }
}

TEST_CASE("emb round trip is byte identical") {
    for (auto name : {"c6", "k4", "grid3x5", "fig2"}) {
        auto emb = canned(name);
        auto text = write_emb(emb);
        auto back = parse_emb(text);
        CHECK(write_emb(back) == text);
    }
}

TEST_CASE("emb parse rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_emb("p emb 2 1\nr 1 2\nr 5 1\no 1 2\n"),
                         doctest::Contains("line 3"), error);
    CHECK_THROWS_AS(parse_emb("r 1 2\n"), error);
    CHECK_THROWS_AS(parse_emb("p emb 2 5\nr 1 2\nr 2 1\no 1 2\n"), error);
    CHECK_THROWS_AS(parse_emb("p emb 2 1\nr 1 2\nr 2 1\n"), error);
}

} // TEST_SUITE

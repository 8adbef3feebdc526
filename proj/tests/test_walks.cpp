#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "util.hpp"

using namespace kpg;
using kpgtest::load_kgraph;
using kpgtest::load_rep;
using kpgtest::path_of;

namespace {

Walk make_walk(const KGraph& g, int src, std::initializer_list<std::pair<const char*, bool>> ls) {
    Walk w;
    w.src = src;
    for (auto [id, star] : ls) w.letters.push_back(Letter{edge_path(g, g.edge(id)), star});
    return w;
}

}  // namespace

TEST_CASE("walk endpoints and star") {
    KGraph g = load_kgraph("lambda_2loops.json");
    Walk w = make_walk(g, 0, {{"a", false}, {"b", true}, {"a", false}});
    CHECK(walk_valid(g, w));
    CHECK(walk_rng(g, w) == 0);
    Walk s = star(g, w);
    CHECK(walk_valid(g, s));
    CHECK(s.letters.size() == 3);
    CHECK(s.letters[0].star == true);   // reversed last letter
    CHECK(s.letters[1].star == false);  // flipped
    Walk ss = star(g, s);
    CHECK(ss == w);
}

TEST_CASE("free reduction is canonical for one color") {
    KGraph g = load_kgraph("lambda_2loops.json");
    SECTION("lambda lambda-star cancels") {
        Walk w = make_walk(g, 0, {{"a", false}, {"a", true}});
        CHECK(reduce_walk(g, w).letters.empty());
    }
    SECTION("mixed word reduces to its core") {
        Walk w = make_walk(g, 0, {{"a", false}, {"b", false}, {"b", true}, {"a", true},
                                  {"b", false}});
        Walk r = reduce_walk(g, w);
        REQUIRE(r.letters.size() == 1);
        CHECK(path_str(g, r.letters[0].path) == "b");
        CHECK(!r.letters[0].star);
    }
    SECTION("no cancellation across distinct loops") {
        Walk w = make_walk(g, 0, {{"a", false}, {"b", true}});
        Walk r = reduce_walk(g, w);
        CHECK(r.letters.size() == 2);
    }
    SECTION("idempotent on random words") {
        std::mt19937 rng(7);
        for (int t = 0; t < 50; ++t) {
            Walk w;
            w.src = 0;
            for (int i = 0; i < 8; ++i)
                w.letters.push_back(
                    Letter{edge_path(g, static_cast<int>(rng() % 2)), rng() % 2 == 0});
            Walk r = reduce_walk(g, w);
            CHECK(reduce_walk(g, r) == r);
            // reduced: no adjacent forward/backward pair with equal paths
            for (size_t i = 0; i + 1 < r.letters.size(); ++i)
                CHECK(!(r.letters[i].path == r.letters[i + 1].path &&
                        r.letters[i].star != r.letters[i + 1].star));
        }
    }
}

TEST_CASE("two-color boundary cancellation") {
    KGraph g = load_kgraph("lambda_ef.json");
    PathNF ef = compose(g, path_of(g, 0, {"e"}), path_of(g, 0, {"f"}));
    SECTION("common outer factor cancels") {
        Walk w;  // ef then (ef)* with different presentations
        w.src = 0;
        w.letters = {Letter{ef, false}, Letter{ef, true}};
        CHECK(reduce_walk(g, w).letters.empty());
    }
    SECTION("partial cancellation leaves the residue") {
        Walk w;
        w.src = 0;
        w.letters = {Letter{path_of(g, 0, {"e"}), false}, Letter{ef, true}};
        Walk r = reduce_walk(g, w);
        REQUIRE(r.letters.size() == 1);
        CHECK(r.letters[0].star);
        CHECK(path_str(g, r.letters[0].path) == "f");
    }
    SECTION("same-direction letters merge") {
        Walk w;
        w.src = 0;
        w.letters = {Letter{path_of(g, 0, {"f"}), false}, Letter{path_of(g, 0, {"e"}), false}};
        Walk r = reduce_walk(g, w);
        REQUIRE(r.letters.size() == 1);
        CHECK(r.letters[0].path == ef);  // f then e normalizes through the square
    }
}

TEST_CASE("lift_walk follows explicit structure and label matching") {
    RepKGraph d = load_rep("delta_lasso.json");
    const KGraph& g = d.g();
    VertexAddr A = core_addr(d, d.vertex("A"));
    VertexAddr B = core_addr(d, d.vertex("B"));

    SECTION("forward lift of e2 reaches B") {
        Walk w = make_walk(g, 0, {{"e2", false}});
        auto end = lift_walk(d, A, w);
        REQUIRE(end);
        CHECK(*end == B);
    }
    SECTION("starred letter with wrong label kills the lift") {
        Walk w = make_walk(g, 0, {{"e1", true}});
        CHECK(!lift_walk(d, B, w));  // B's color-1 in-label is e2
        CHECK(lift_walk(d, A, w));
    }
    SECTION("loop returns home") {
        Walk w = make_walk(g, 0, {{"e2", false}, {"e2", true}});
        auto end = lift_walk(d, A, w);
        REQUIRE(end);
        CHECK(*end == A);
    }
    SECTION("reduction preserves lift endpoints") {
        std::mt19937 rng(11);
        for (int t = 0; t < 60; ++t) {
            Walk w;
            w.src = 0;
            for (int i = 0; i < 6; ++i)
                w.letters.push_back(
                    Letter{edge_path(g, static_cast<int>(rng() % g.edges.size())), rng() % 2 == 0});
            if (!walk_valid(g, w)) continue;
            auto before = lift_walk(d, A, w);
            if (!before) continue;
            auto after = lift_walk(d, A, reduce_walk(g, w));
            REQUIRE(after);
            CHECK(*after == *before);
        }
    }
}
